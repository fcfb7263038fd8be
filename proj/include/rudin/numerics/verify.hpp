#pragma once

// Numerical checks of the one-variable identities the co-rank formulas
// rest on. Each returns a verdict with the worst residual observed.

#include <string>
#include <vector>

#include "rudin/blaschke.hpp"

namespace rudin::numerics {

struct Verdict {
  bool passed = false;
  double residual = 0.0;
  std::string detail;

  explicit operator bool() const noexcept { return passed; }
};

/// M_z^* phi lies in Q_phi and generates it under M_z^*. Needs 1 <= deg phi <= 6.
Verdict verify_star_cyclic(const BlaschkeProduct& phi);

/// With f = M_z^* phi, M_psi^* f generates Q_theta for theta = phi / gcd(phi, psi).
/// Needs 1 <= deg phi <= 6.
Verdict verify_quotient_cyclic(const BlaschkeProduct& phi, const BlaschkeProduct& psi);

/// For g = b^{m-1} M_z^* b_alpha: ||g|| = (1 - |alpha|^2)^{1/2} and
/// <M_z^* g, g> / <g, g> = conj(alpha).
Verdict verify_projection_identity(const DiscPoint& alpha, int m);

/// M_{eta_1}^* (x) ... (x) M_{eta_n}^* vanishes on Q_{xi_1} (x) ... (x) Q_{xi_n}.
/// Throws Error(HypothesisNotMet) unless xi_j | eta_j for some j; needs
/// n <= 3 and degrees <= 4.
Verdict verify_annihilation(const std::vector<BlaschkeProduct>& xi, const std::vector<BlaschkeProduct>& eta);

}  // namespace rudin::numerics
