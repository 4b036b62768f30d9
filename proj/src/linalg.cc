#include "eplink/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eplink/errors.h"

namespace eplink {

namespace {

void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) {
    throw InvalidInput("matrix dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

double off_diagonal_norm(const Matrix& m) {
  double s = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (r != c) s += std::norm(m(r, c));
    }
  }
  return std::sqrt(s);
}

}  // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

Matrix::Matrix(std::size_t dim, std::initializer_list<Complex> row_major) : dim_(dim), data_(row_major) {
  if (data_.size() != dim * dim) {
    throw InvalidInput("matrix initializer has " + std::to_string(data_.size()) + " entries, expected " +
                       std::to_string(dim * dim));
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::outer(std::span<const Complex> ket) {
  Matrix m(ket.size());
  for (std::size_t r = 0; r < ket.size(); ++r) {
    for (std::size_t c = 0; c < ket.size(); ++c) m(r, c) = ket[r] * std::conj(ket[c]);
  }
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

std::vector<Complex> Matrix::column(std::size_t col) const {
  std::vector<Complex> v(dim_);
  for (std::size_t r = 0; r < dim_; ++r) v[r] = (*this)(r, col);
  return v;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  Matrix out(na * nb);
  for (std::size_t ra = 0; ra < na; ++ra) {
    for (std::size_t ca = 0; ca < na; ++ca) {
      for (std::size_t rb = 0; rb < nb; ++rb) {
        for (std::size_t cb = 0; cb < nb; ++cb) out(ra * nb + rb, ca * nb + cb) = a(ra, ca) * b(rb, cb);
      }
    }
  }
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

double hermiticity_defect(const Matrix& m) { return max_abs_diff(m, m.adjoint()); }

Matrix partial_transpose_second(const Matrix& m, std::size_t dim_a, std::size_t dim_b) {
  if (dim_a * dim_b != m.dim()) {
    throw InvalidInput("partial transpose: " + std::to_string(dim_a) + "x" + std::to_string(dim_b) +
                       " does not factor a " + std::to_string(m.dim()) + "-dimensional operator");
  }
  Matrix out(m.dim());
  for (std::size_t ra = 0; ra < dim_a; ++ra) {
    for (std::size_t ca = 0; ca < dim_a; ++ca) {
      for (std::size_t rb = 0; rb < dim_b; ++rb) {
        for (std::size_t cb = 0; cb < dim_b; ++cb) {
          out(ra * dim_b + rb, ca * dim_b + cb) = m(ra * dim_b + cb, ca * dim_b + rb);
        }
      }
    }
  }
  return out;
}

Complex expectation(const Matrix& m, std::span<const Complex> v) {
  if (v.size() != m.dim()) throw InvalidInput("expectation: vector length does not match matrix dimension");
  Complex acc = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Complex row = 0.0;
    for (std::size_t c = 0; c < m.dim(); ++c) row += m(r, c) * v[c];
    acc += std::conj(v[r]) * row;
  }
  return acc;
}

EigenSystem hermitian_eigensystem(const Matrix& input) {
  const std::size_t n = input.dim();
  // Work on the Hermitian part so that tiny asymmetries cannot stall sweeps.
  Matrix a = 0.5 * (input + input.adjoint());
  Matrix v = Matrix::identity(n);

  double scale = 0.0;
  for (const auto& z : a.data()) scale = std::max(scale, std::abs(z));
  const double target = 1e-15 * std::max(scale, 1e-300);

  for (int sweep = 0; sweep < 100 && off_diagonal_norm(a) > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag <= 1e-300) continue;

        // Phase on basis vector q makes a(p,q) real and positive.
        const Complex phase = std::conj(a(p, q)) / mag;  // e^{-i arg a_pq}
        for (std::size_t k = 0; k < n; ++k) {
          a(k, q) *= phase;
          v(k, q) *= phase;
        }
        for (std::size_t k = 0; k < n; ++k) a(q, k) *= std::conj(phase);

        // Real symmetric Jacobi rotation zeroing (p,q).
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem out{std::vector<double>(n), Matrix(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = a(order[i], order[i]).real();
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, i) = v(k, order[i]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const Matrix& m) { return hermitian_eigensystem(m).values; }

}  // namespace eplink
