#pragma once

#include <array>
#include <cstddef>
#include <utility>

#include "eplink/density_matrix.h"
#include "eplink/linalg.h"

namespace eplink {

/// Pauli operators, always in the order (I, X, Y, Z). Array positions in
/// every public API follow this order.
enum class Pauli : std::size_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<Pauli, 4> kPaulis = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

const Matrix& pauli_matrix(Pauli p);

/// Probability distribution (p_I, p_X, p_Y, p_Z) over Pauli errors.
///
/// Inputs whose sum lies within 1e-9 of one are renormalized; larger
/// deviations, negative entries or entries above one are rejected.
class PauliDistribution {
 public:
  explicit PauliDistribution(std::array<double, 4> probs);

  static PauliDistribution identity() { return PauliDistribution({1.0, 0.0, 0.0, 0.0}); }
  static PauliDistribution uniform() { return PauliDistribution({0.25, 0.25, 0.25, 0.25}); }
  /// (1 - 3p/4, p/4, p/4, p/4): acts as rho -> (1-p) rho + p I/2.
  static PauliDistribution isotropic(double p);
  /// (1 - p, 0, 0, p): Z errors only.
  static PauliDistribution dephasing(double p);

  double operator[](Pauli k) const { return p_[static_cast<std::size_t>(k)]; }
  double operator[](std::size_t k) const { return p_[k]; }
  const std::array<double, 4>& probs() const { return p_; }
  double max() const;

  friend bool operator==(const PauliDistribution&, const PauliDistribution&) = default;

 private:
  std::array<double, 4> p_;
};

/// sum_k p_k P_k m P_k^dagger on an arbitrary 2x2 operator (linear extension).
Matrix pauli_map(const PauliDistribution& dist, const Matrix& m);

/// Pauli channel on a qubit state.
DensityMatrix apply_pauli(const PauliDistribution& dist, const DensityMatrix& rho);

/// (id (x) P)(|Phi+><Phi+|), with the channel acting on the second qubit and
/// |Phi+> = (|00> + |11>)/sqrt(2). Trace one.
DensityMatrix choi_state(const PauliDistribution& dist);

/// Shannon entropy in bits, 0 log 0 = 0.
double shannon_entropy(const PauliDistribution& dist);

/// Binary entropy in bits. Throws InvalidInput outside [0, 1].
double binary_entropy(double x);

/// 1 - H2(p_max) when p_max >= 1/2, else 0.
double phi_upper(const PauliDistribution& dist);

struct NptWitness {
  bool is_npt;
  double min_pt_eigenvalue;
};

inline constexpr double kNptThreshold = 1e-12;

/// Smallest eigenvalue of the partial transpose (second qubit) of the Choi
/// state; NPT when it is below -kNptThreshold.
NptWitness npt_witness(const PauliDistribution& dist);

}  // namespace eplink
