#pragma once

// Built-in families: the two worked examples and a growing-window family
// whose co-rank is unbounded as the window grows.

#include <vector>

#include "rudin/family.hpp"

namespace rudin::fixtures {

/// phi_m = prod_{j>=m} b_{a_j} (decreasing) and psi_m = prod_{j<=m} b_{c_j}
/// (increasing) with a_k = a_{k+3} = a, c_k = c_{k+2} = c and all other
/// points distinct. Encoded on the window [k-1, k+4].
struct Counterexample {
  RudinFamily family;
  DiscPoint a;
  DiscPoint c;
};
Counterexample counterexample(int k = 0);

/// n sequences of distinct points on [k_min, k_max]; variables in
/// `increasing` use phi_{i,k} = prod_{j<=k} b_{alpha_{i,j}}, the others
/// phi_{i,k} = prod_{j>=k} b_{alpha_{i,j}}.
RudinFamily distinct_points(std::size_t n, const std::vector<std::size_t>& increasing, int k_min,
                            int k_max);

/// Window [-w, w], two variables, primes a_m, c_m for m = 1..w with
/// ord(phi_{1,k}, a_m) = m+1+k and ord(phi_{2,k}, c_m) = m+1-k for |k| <= m.
/// Flagged as truncated.
RudinFamily growing_window(int w);

/// No prime tuple ever occurs jointly.
RudinFamily empty_overlap();

}  // namespace rudin::fixtures
