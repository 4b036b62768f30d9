#pragma once

#include <array>
#include <cstddef>

#include "eplink/density_matrix.h"
#include "eplink/pauli.h"

namespace eplink {

/// Output basis of every erasure-type channel: {|H>, |V>, |e>}.
inline constexpr std::size_t kOutputDim = 3;
inline constexpr std::size_t kFlagIndex = 2;

/// With probability eta the photon arrives and suffers a Pauli error drawn
/// from dist; otherwise the receiver sees the orthogonal flag |e>.
class ErasurePauliChannel {
 public:
  ErasurePauliChannel(double eta, PauliDistribution dist);

  static ErasurePauliChannel complete_erasure() { return {0.0, PauliDistribution::identity()}; }

  double eta() const { return eta_; }
  const PauliDistribution& dist() const { return dist_; }

 private:
  double eta_;
  PauliDistribution dist_;
};

/// Rates in ebits per channel use.
struct CapacityBounds {
  double lower;
  double upper;
  bool exact;
};

inline constexpr double kExactTolerance = 1e-12;

/// Places a 2x2 polarization operator in the {H, V} block of a 3x3 operator.
Matrix embed_polarization(const Matrix& block);

DensityMatrix apply_ep(const ErasurePauliChannel& ch, const DensityMatrix& rho);

/// Choi state on qubit (x) qutrit: (1-eta) (I/2)(x)|e><e| + eta sigma_P.
/// Row/column index is 3*a + b for reference qubit a and output level b.
DensityMatrix choi_ep(const ErasurePauliChannel& ch);

/// Embeds a 4x4 two-qubit operator into the 6x6 qubit (x) qutrit space.
Matrix embed_two_qubit(const Matrix& m);

/// Hashing lower bound eta*max(0, 1-H(p)) and upper bound eta*Phi(p).
CapacityBounds capacity_bounds(const ErasurePauliChannel& ch);

/// Upper bound for isotropic errors: eta[1 - H2(3p/4)] for p <= 2/3, else 0.
double capacity_edp_upper(double eta, double p);

/// Exact capacity for Z errors only: eta[1 - H2(p)]. Probabilities above 1/2
/// are relabeled to 1-p (a Z correction maps one onto the other).
double capacity_edh(double eta, double p);

/// True iff eta == 0 or p_max <= 1/2.
bool is_zero_capacity(const ErasurePauliChannel& ch);

enum class ComponentKind { Pauli, CompleteErasure };

struct EnsembleComponent {
  double weight;
  ComponentKind kind;
  PauliDistribution dist;  // identity for CompleteErasure
};

/// {(eta, Pauli), (1-eta, CompleteErasure)}.
std::array<EnsembleComponent, 2> ensemble_decomposition(const ErasurePauliChannel& ch);

/// Unweighted 3x3 output of a single ensemble member.
Matrix apply_component(const EnsembleComponent& component, const DensityMatrix& rho);

}  // namespace eplink
