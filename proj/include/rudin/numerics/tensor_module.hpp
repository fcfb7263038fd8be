#pragma once

// Quotient modules of H^2(D^n) spanned by tensor products of model spaces,
// with their compressed adjoint shift tuples, and the two co-rank oracles.
//
// A module is stored in the coordinates of a product of factor bases: each
// basis vector is e_{j_1} (x) ... (x) e_{j_n} for a multi-index in `lattice`,
// where e_j is the j-th column of factor i. The factor bases of a single-point
// module are the nested bases {b^j M_z^* b}, so the module Q(alpha; A) is the
// span over the union of boxes {0..l_1-1} x ... x {0..l_n-1}, (l) in A.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rudin/family.hpp"
#include "rudin/numerics/model_space.hpp"

namespace rudin::numerics {

/// Inputs past this total box volume are refused.
inline constexpr long kDeskScaleCap = 512;

struct TensorModule {
  std::size_t n = 0;
  std::optional<std::vector<DiscPoint>> point;  // set for single-point modules
  std::vector<ModelSpace> factors;
  std::vector<std::vector<int>> lattice;  // module basis, lexicographic
  std::vector<Matrix> adjoint_shifts;     // T_i = P_Q M_{z_i}^*|_Q, dim x dim

  std::size_t dim() const noexcept { return lattice.size(); }
  bool single_point() const noexcept { return point.has_value(); }

  /// Number of multi-indices in the full product of factor bases.
  std::size_t ambient_dim() const;
  std::size_t ambient_index(const std::vector<int>& multi_index) const;

  /// Module coordinates -> ambient coordinates.
  Matrix embed(const Matrix& coords) const;

  /// Coefficient tensor of basis vector `b`, flattened with the last variable
  /// fastest; size truncation^n, so only for small modules.
  Vector tensor_coefficients(std::size_t b) const;
};

/// Throws Error(InvalidArgument) for n > 3, empty A or entries < 1 and
/// Error(DeskScaleExceeded) when sum over A of prod l_i exceeds kDeskScaleCap.
TensorModule assemble_point_module(const std::vector<DiscPoint>& alpha, std::span<const OrderTuple> tuples);
TensorModule assemble_point_module(const std::vector<DiscPoint>& alpha, std::span<const OrderTuple> tuples,
                                   int truncation);

/// Q_{xi_1} (x) ... (x) Q_{xi_n}; single-point when every factor has one distinct zero.
TensorModule assemble_tensor_product(std::vector<ModelSpace> factors);

/// dim M - rank [(T_1 - conj(a_1)) | ... | (T_n - conj(a_n))].
/// Throws Error(NotSinglePoint).
int nakayama_corank(const TensorModule& m);

struct KrylovResult {
  bool generated = false;
  int achieved_dim = 0;
};

/// Closes span(vectors) under all T_i. `vectors` are columns in module
/// coordinates; Error(VectorOutsideModule) if the row count is not dim.
KrylovResult krylov_generated(const TensorModule& m, const Matrix& vectors);

/// Same, for columns in ambient coordinates. Throws Error(VectorOutsideModule)
/// when a column has mass above 1e-8 (relative) off the module lattice.
KrylovResult krylov_generated_ambient(const TensorModule& m, const Matrix& vectors);

/// Coordinates of `coords` (in `from`) projected onto `to`. Both must be
/// single-point modules over the same point and truncation.
Matrix compress(const TensorModule& from, const Matrix& coords, const TensorModule& to);

struct GeneratorCertificate {
  Matrix vectors;  // generating set found, module coordinates
  int generators = 0;
  int achieved_dim = 0;
  int target_dim = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  int successes = 0;         // successful draws at `generators`
  int failures_below = 0;    // failed draws at generators - 1 (all of them)
};

/// Smallest r such that r complex Gaussian vectors generate the module in
/// at least one of `trials` draws.
GeneratorCertificate randomized_min_generators(const TensorModule& m, int trials, std::uint64_t seed);

/// max_{i,j} ||T_i T_j - T_j T_i||_max.
double commutator_residual(const TensorModule& m);

/// max_i ||(T_i - conj(a_i))^dim||_max; single-point modules only.
double nilpotency_residual(const TensorModule& m);

/// Largest |<T_i e_p, e_q>| with p in the module and q off it, in the
/// ambient product of factor bases.
double invariance_leak(const TensorModule& m);

}  // namespace rudin::numerics
