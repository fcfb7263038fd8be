#include "rudin/numerics/verify.hpp"

#include <cmath>
#include <sstream>

#include "rudin/error.hpp"
#include "rudin/numerics/model_space.hpp"

namespace rudin::numerics {

namespace {

void require_degree(const BlaschkeProduct& phi, int lo, int hi, const char* what) {
  if (phi.degree() < lo || phi.degree() > hi) {
    std::ostringstream os;
    os << what << ": degree " << phi.degree() << " outside [" << lo << ", " << hi << "]";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

// M_z^* phi on n coefficients.
Vector shifted_generator(const BlaschkeProduct& phi, int n) {
  return backward_shift(taylor_truncation(phi, n + 1).coeffs).head(n);
}

Verdict generates(const ModelSpace& q, const Vector& f, const std::string& label) {
  Verdict v;
  const Vector coords = q.basis.adjoint() * f;
  v.residual = (f - q.basis * coords).norm() / std::max(f.norm(), 1e-300);
  const Matrix closure = invariant_closure(coords, {compressed_adjoint_shift(q)});
  std::ostringstream os;
  os << label << ": membership residual " << v.residual << ", closure dim " << closure.cols() << " of "
     << q.dim();
  v.detail = os.str();
  v.passed = v.residual <= kTolerance && closure.cols() == q.dim();
  return v;
}

}  // namespace

Verdict verify_star_cyclic(const BlaschkeProduct& phi) {
  require_degree(phi, 1, 6, "verify_star_cyclic");
  const ModelSpace q = general_basis(phi);
  return generates(q, shifted_generator(phi, q.truncation), "M_z^* phi in Q_phi");
}

Verdict verify_quotient_cyclic(const BlaschkeProduct& phi, const BlaschkeProduct& psi) {
  require_degree(phi, 1, 6, "verify_quotient_cyclic");
  const ModelSpace q = general_basis(phi);
  const Vector f = shifted_generator(phi, q.truncation);
  if (Verdict base = generates(q, f, "f in Q_phi"); !base) return base;

  const Vector g = q.basis * (adjoint_multiplier(q, psi) * (q.basis.adjoint() * f));
  const BlaschkeProduct theta = quotient(phi, gcd(phi, psi));
  if (theta.is_unit()) {
    Verdict v;
    v.residual = g.norm();
    v.passed = v.residual <= kTolerance;
    v.detail = "theta is the unit; ||M_psi^* f|| = " + std::to_string(v.residual);
    return v;
  }
  return generates(general_basis(theta, q.truncation), g, "M_psi^* f in Q_theta");
}

Verdict verify_projection_identity(const DiscPoint& alpha, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
  const Complex a = alpha.value();
  const int n = adaptive_truncation(std::abs(a), m, m);
  const Vector wide = single_point_raw(alpha, m, n + 1).col(m - 1);
  const Vector g = wide.head(n);
  const Vector shifted = backward_shift(wide).head(n);

  const Complex ratio = inner(shifted, g) / inner(g, g);
  const double norm_error = std::abs(g.norm() - std::sqrt(1.0 - std::norm(a)));
  const double ratio_error = std::abs(ratio - std::conj(a));

  Verdict v;
  v.residual = std::max(norm_error, ratio_error);
  v.passed = norm_error <= kTolerance && ratio_error <= kTolerance;
  std::ostringstream os;
  os << "alpha=" << alpha.to_string() << " m=" << m << ": |norm error| " << norm_error << ", |ratio error| "
     << ratio_error;
  v.detail = os.str();
  return v;
}

Verdict verify_annihilation(const std::vector<BlaschkeProduct>& xi, const std::vector<BlaschkeProduct>& eta) {
  if (xi.empty() || xi.size() != eta.size() || xi.size() > 3) {
    throw Error(ErrorCode::InvalidArgument, "verify_annihilation needs 1 <= n <= 3 matching factors");
  }
  bool hypothesis = false;
  for (std::size_t j = 0; j < xi.size(); ++j) {
    require_degree(xi[j], 0, 4, "verify_annihilation");
    require_degree(eta[j], 0, 4, "verify_annihilation");
    hypothesis = hypothesis || divides(xi[j], eta[j]);
  }
  if (!hypothesis) throw Error(ErrorCode::HypothesisNotMet, "no j with xi_j | eta_j");

  Matrix op = Matrix::Ones(1, 1);
  for (std::size_t j = 0; j < xi.size(); ++j) {
    const Matrix f = xi[j].is_unit() ? Matrix(0, 0) : adjoint_multiplier(general_basis(xi[j]), eta[j]);
    Matrix next(op.rows() * f.rows(), op.cols() * f.cols());
    for (Eigen::Index r = 0; r < op.rows(); ++r) {
      for (Eigen::Index c = 0; c < op.cols(); ++c) {
        next.block(r * f.rows(), c * f.cols(), f.rows(), f.cols()) = op(r, c) * f;
      }
    }
    op = std::move(next);
  }
  Verdict v;
  v.residual = op.size() == 0 ? 0.0 : Eigen::JacobiSVD<Matrix>(op).singularValues()[0];
  v.passed = v.residual <= kTolerance;
  v.detail = "operator norm on the tensor module " + std::to_string(v.residual);
  return v;
}

}  // namespace rudin::numerics
