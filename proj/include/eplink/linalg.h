#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace eplink {

using Complex = std::complex<double>;

/// Dense square complex matrix stored row-major.
///
/// Sized for the small systems used throughout the library (2, 3, 4 and 6
/// dimensional), so every operation is a straightforward loop.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim);
  Matrix(std::size_t dim, std::initializer_list<Complex> row_major);

  static Matrix identity(std::size_t dim);
  /// |v><v| for an arbitrary (not necessarily normalized) vector.
  static Matrix outer(std::span<const Complex> ket);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
  std::span<const Complex> data() const { return data_; }

  Matrix adjoint() const;
  Complex trace() const;
  std::vector<Complex> column(std::size_t col) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex scale);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);

/// Largest elementwise |a - b|. Throws InvalidInput on dimension mismatch.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Largest elementwise |m - m^dagger|.
double hermiticity_defect(const Matrix& m);

/// Transpose of the second factor of a (dim_a x dim_b) bipartite operator.
Matrix partial_transpose_second(const Matrix& m, std::size_t dim_a, std::size_t dim_b);

/// <v|m|v>.
Complex expectation(const Matrix& m, std::span<const Complex> v);

struct EigenSystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column i belongs to values[i]
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
/// Only the Hermitian part of the input is used.
EigenSystem hermitian_eigensystem(const Matrix& m);
std::vector<double> hermitian_eigenvalues(const Matrix& m);

}  // namespace eplink
