#pragma once

// Model spaces Q_phi = H^2 (-) phi H^2 for finite Blaschke products phi,
// realized on truncated Taylor coefficient vectors.

#include <Eigen/Dense>

#include "rudin/blaschke.hpp"

namespace rudin::numerics {

using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Tolerance for identities asserted on computed quantities.
inline constexpr double kTolerance = 1e-8;
/// Relative cut below which singular values / pivots count as zero.
inline constexpr double kRankThreshold = 1e-10;
/// Largest truncation degree the oracle accepts.
inline constexpr int kMaxTruncation = 20000;

/// First N Taylor coefficients of a function on the disc (degrees 0..N-1).
struct TruncatedVector {
  Vector coeffs;

  int size() const noexcept { return static_cast<int>(coeffs.size()); }
  double norm() const { return coeffs.norm(); }
};

/// Smallest N > degree with binom(N+m-1, m-1) r^N < 1e-14 (1 - r), r the
/// largest zero modulus and m the largest multiplicity, then enlarged until
/// the basis columns carry relative mass below 1e-12 past N. Throws
/// Error(TruncationTooCoarse) past kMaxTruncation.
int adaptive_truncation(const BlaschkeProduct& phi);
int adaptive_truncation(double max_modulus, int max_multiplicity, int degree);

/// Taylor coefficients of phi, one factor at a time.
TruncatedVector taylor_truncation(const BlaschkeProduct& phi, int n);

/// Coefficients of the Szego kernel (1 - conj(alpha) z)^{-1}.
Vector szego_kernel(Complex alpha, int n);

/// f -> b_alpha f on truncated coefficients, exact up to the truncation.
Vector multiply_by_factor(const Vector& f, Complex alpha);

/// M_z^*: drops the constant coefficient.
Vector backward_shift(const Vector& f);

/// Hardy inner product <f, g>, linear in f.
Complex inner(const Vector& f, const Vector& g);

struct ModelSpace {
  BlaschkeProduct generator;
  int truncation = 0;
  Matrix basis;  // truncation x dim, orthonormal columns spanning Q_generator

  int dim() const noexcept { return static_cast<int>(basis.cols()); }
};

/// Raw vectors b_alpha^j M_z^* b_alpha, j = 0..m-1, as columns.
Matrix single_point_raw(const DiscPoint& alpha, int m, int n);

/// Normalized {b_alpha^j M_z^* b_alpha}_{j<m}, an orthonormal basis of Q_{b_alpha^m}.
/// Throws Error(TruncationTooCoarse) when n leaves coefficient mass above 1e-12 beyond it.
ModelSpace single_point_basis(const DiscPoint& alpha, int m, int n);
ModelSpace single_point_basis(const DiscPoint& alpha, int m);

/// Columns sqrt(1-|a_k|^2) S(., a_k) prod_{j<k} b_{a_j} on n coefficients.
Matrix takenaka_malmquist_columns(const std::vector<DiscPoint>& zeros, int n);

/// Takenaka-Malmquist basis e_k = sqrt(1-|a_k|^2) S(., a_k) prod_{j<k} b_{a_j}
/// over the zeros of phi listed with repetition.
ModelSpace general_basis(const BlaschkeProduct& phi, int n);
ModelSpace general_basis(const BlaschkeProduct& phi);

/// max |G - I| for the Gram matrix of the columns.
double gram_residual(const Matrix& basis);

/// max over basis vectors e and m of |<e, phi z^m>|.
double membership_residual(const ModelSpace& q);

/// || M_z^* B - B (B^* M_z^* B) ||_max: zero iff span B is M_z^*-invariant.
double coinvariance_residual(const ModelSpace& q);

/// Matrix of P_Q M_z^*|_Q in the basis of q.
Matrix compressed_adjoint_shift(const ModelSpace& q);

/// Matrix of M_psi^*|_Q: the adjoint of psi(S) for the compressed shift
/// S = P_Q M_z|_Q. Throws Error(SingularResolvent) if some I - conj(a) S is
/// numerically singular.
Matrix adjoint_multiplier(const ModelSpace& q, const BlaschkeProduct& psi);

/// Smallest closed subspace containing the columns of `start` and invariant
/// under all `ops`; returned as orthonormal columns. Singular values below
/// kRankThreshold times the largest are dropped; the zero start gives width 0.
Matrix invariant_closure(const Matrix& start, const std::vector<Matrix>& ops);

/// Orthonormal basis of the column range.
Matrix orthonormal_range(const Matrix& m);

}  // namespace rudin::numerics
