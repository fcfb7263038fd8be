#include "rudin/numerics/model_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rudin/error.hpp"

namespace rudin::numerics {

namespace {

constexpr double kTailBound = 1e-14;
constexpr double kTailMass = 1e-12;

double max_modulus(const BlaschkeProduct& phi) {
  double r = 0.0;
  for (const auto& [p, m] : phi.zeros()) r = std::max(r, std::abs(p.value()));
  return r;
}

int max_multiplicity(const BlaschkeProduct& phi) {
  int m = 0;
  for (const auto& [p, k] : phi.zeros()) m = std::max(m, k);
  return m;
}

bool tail_ok(const Matrix& wide, int n) {
  for (Eigen::Index c = 0; c < wide.cols(); ++c) {
    const double total = wide.col(c).norm();
    if (wide.col(c).tail(wide.rows() - n).norm() > kTailMass * std::max(total, 1e-300)) return false;
  }
  return true;
}

// Columns are computed on 2n coefficients; the part beyond n must be negligible.
void check_tail(const Matrix& wide, int n, const char* what) {
  if (tail_ok(wide, n)) return;
  double worst = 0.0;
  for (Eigen::Index c = 0; c < wide.cols(); ++c) {
    worst = std::max(worst, wide.col(c).tail(wide.rows() - n).norm() / wide.col(c).norm());
  }
  std::ostringstream os;
  os << what << ": truncation " << n << " leaves relative tail mass " << worst;
  throw Error(ErrorCode::TruncationTooCoarse, os.str());
}

void check_size(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "truncation degree must be >= 1");
  if (n > kMaxTruncation) {
    throw Error(ErrorCode::TruncationTooCoarse,
                "truncation " + std::to_string(n) + " exceeds the supported maximum");
  }
}

int rule_truncation(double r, int m, int degree) {
  const double target = std::log(kTailBound * (1.0 - r));
  for (int n = degree + 1; n <= kMaxTruncation; ++n) {
    // log(binom(n+m-1, m-1) r^n)
    const double log_binom = std::lgamma(n + m) - std::lgamma(m) - std::lgamma(n + 1);
    if (log_binom + n * std::log(r) < target) return n;
  }
  throw Error(ErrorCode::TruncationTooCoarse, "zeros too close to the circle for the supported truncation");
}

// The a priori rule bounds single coefficients; grow n until the tail mass
// of the actual basis columns is below kTailMass as well.
template <class Columns>
int refine(int n, Columns columns) {
  while (!tail_ok(columns(2 * n), n)) {
    n += std::max(1, n / 4);
    if (n > kMaxTruncation) {
      throw Error(ErrorCode::TruncationTooCoarse, "zeros too close to the circle for the supported truncation");
    }
  }
  return n;
}

}  // namespace

int adaptive_truncation(double max_modulus, int max_multiplicity, int degree) {
  const double r = max_modulus;
  const int m = std::max(1, max_multiplicity);
  if (r == 0.0) return degree + 1;
  return refine(rule_truncation(r, m, degree), [&](int wide) { return single_point_raw(DiscPoint(r, 0.0), m, wide); });
}

int adaptive_truncation(const BlaschkeProduct& phi) {
  const double r = max_modulus(phi);
  if (r == 0.0) return phi.degree() + 1;
  const auto zeros = phi.zero_list();
  return refine(rule_truncation(r, std::max(1, max_multiplicity(phi)), phi.degree()),
                [&](int wide) { return takenaka_malmquist_columns(zeros, wide); });
}

Vector szego_kernel(Complex alpha, int n) {
  Vector k(n);
  Complex p{1.0, 0.0};
  const Complex a = std::conj(alpha);
  for (int j = 0; j < n; ++j) {
    k[j] = p;
    p *= a;
  }
  return k;
}

Vector multiply_by_factor(const Vector& f, Complex alpha) {
  // b_alpha f = (z - alpha) * f / (1 - conj(alpha) z)
  const Eigen::Index n = f.size();
  const Complex a = std::conj(alpha);
  Vector h(n);
  Complex prev{0.0, 0.0};
  for (Eigen::Index j = 0; j < n; ++j) {
    h[j] = f[j] + a * prev;
    prev = h[j];
  }
  Vector g(n);
  for (Eigen::Index j = 0; j < n; ++j) g[j] = (j > 0 ? h[j - 1] : Complex{}) - alpha * h[j];
  return g;
}

Vector backward_shift(const Vector& f) {
  Vector g = Vector::Zero(f.size());
  if (f.size() > 1) g.head(f.size() - 1) = f.tail(f.size() - 1);
  return g;
}

Complex inner(const Vector& f, const Vector& g) { return g.dot(f); }

TruncatedVector taylor_truncation(const BlaschkeProduct& phi, int n) {
  check_size(n);
  Vector c = Vector::Zero(n);
  c[0] = 1.0;
  for (const auto& p : phi.zero_list()) c = multiply_by_factor(c, p.value());
  return {std::move(c)};
}

Matrix single_point_raw(const DiscPoint& alpha, int m, int n) {
  // callers check the tail on twice the working size
  if (n < 1 || n > 2 * kMaxTruncation) throw Error(ErrorCode::InvalidArgument, "bad coefficient count");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "multiplicity must be >= 1");
  const Complex a = alpha.value();
  Matrix out(n, m);
  Vector g = (1.0 - std::norm(a)) * szego_kernel(a, n);
  for (int j = 0; j < m; ++j) {
    out.col(j) = g;
    g = multiply_by_factor(g, a);
  }
  return out;
}

ModelSpace single_point_basis(const DiscPoint& alpha, int m, int n) {
  check_size(n);
  const Matrix wide = single_point_raw(alpha, m, 2 * n);
  check_tail(wide, n, "single_point_basis");
  Matrix basis = wide.topRows(n);
  for (Eigen::Index j = 0; j < basis.cols(); ++j) basis.col(j).normalize();
  return {BlaschkeProduct::factor(alpha, m), n, std::move(basis)};
}

ModelSpace single_point_basis(const DiscPoint& alpha, int m) {
  return single_point_basis(alpha, m, adaptive_truncation(std::abs(alpha.value()), m, m));
}

Matrix takenaka_malmquist_columns(const std::vector<DiscPoint>& zeros, int n) {
  Matrix out(n, static_cast<Eigen::Index>(zeros.size()));
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    const Complex a = zeros[k].value();
    Vector e = std::sqrt(1.0 - std::norm(a)) * szego_kernel(a, n);
    for (std::size_t j = 0; j < k; ++j) e = multiply_by_factor(e, zeros[j].value());
    out.col(static_cast<Eigen::Index>(k)) = e;
  }
  return out;
}

ModelSpace general_basis(const BlaschkeProduct& phi, int n) {
  check_size(n);
  const Matrix wide = takenaka_malmquist_columns(phi.zero_list(), 2 * n);
  check_tail(wide, n, "general_basis");
  return {phi, n, wide.topRows(n)};
}

ModelSpace general_basis(const BlaschkeProduct& phi) { return general_basis(phi, adaptive_truncation(phi)); }

double gram_residual(const Matrix& basis) {
  const Matrix g = basis.adjoint() * basis;
  return (g - Matrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

double membership_residual(const ModelSpace& q) {
  const Vector phi = taylor_truncation(q.generator, q.truncation).coeffs;
  const int n = q.truncation;
  double worst = 0.0;
  for (int m = 0; m + q.dim() < n; ++m) {
    Vector shifted = Vector::Zero(n);
    shifted.tail(n - m) = phi.head(n - m);
    worst = std::max(worst, (shifted.adjoint() * q.basis).cwiseAbs().maxCoeff());
  }
  return worst;
}

Matrix compressed_adjoint_shift(const ModelSpace& q) {
  Matrix shifted = Matrix::Zero(q.basis.rows(), q.basis.cols());
  if (q.basis.rows() > 1) shifted.topRows(q.basis.rows() - 1) = q.basis.bottomRows(q.basis.rows() - 1);
  return q.basis.adjoint() * shifted;
}

double coinvariance_residual(const ModelSpace& q) {
  if (q.dim() == 0) return 0.0;
  Matrix shifted = Matrix::Zero(q.basis.rows(), q.basis.cols());
  if (q.basis.rows() > 1) shifted.topRows(q.basis.rows() - 1) = q.basis.bottomRows(q.basis.rows() - 1);
  return (shifted - q.basis * (q.basis.adjoint() * shifted)).cwiseAbs().maxCoeff();
}

Matrix adjoint_multiplier(const ModelSpace& q, const BlaschkeProduct& psi) {
  const Eigen::Index d = q.dim();
  const Matrix s = compressed_adjoint_shift(q).adjoint();
  const Matrix id = Matrix::Identity(d, d);
  Matrix m = id;
  for (const auto& p : psi.zero_list()) {
    const Complex a = p.value();
    const Eigen::PartialPivLU<Matrix> lu(id - std::conj(a) * s);
    if (d > 0 && lu.rcond() < 1e-12) {
      throw Error(ErrorCode::SingularResolvent, "I - conj(a) S is singular for a = " + p.to_string());
    }
    m = m * (s - a * id) * lu.inverse();
  }
  return m.adjoint();
}

Matrix orthonormal_range(const Matrix& m) {
  if (m.cols() == 0 || m.rows() == 0) return Matrix(m.rows(), 0);
  const Eigen::ColPivHouseholderQR<Matrix> qr(m);
  const Eigen::Index k = std::min(m.rows(), m.cols());
  const double lead = k > 0 ? std::abs(qr.matrixR()(0, 0)) : 0.0;
  const double cut = kRankThreshold * std::max(1.0, lead);
  Eigen::Index rank = 0;
  while (rank < k && std::abs(qr.matrixR()(rank, rank)) > cut) ++rank;
  return Matrix(qr.householderQ()) .leftCols(rank);
}

namespace {

struct ScaledRange {
  Matrix orthonormal;
  Matrix scaled;  // orthonormal * diag(singular values)
};

ScaledRange scaled_range(const Matrix& m) {
  if (m.cols() == 0 || m.rows() == 0) return {Matrix(m.rows(), 0), Matrix(m.rows(), 0)};
  // BDCSVD in Eigen 3.4.0 can return a wrong U for rank-deficient complex input
  const Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < s.size() && s[rank] > kRankThreshold * s[0]) ++rank;
  Matrix u = svd.matrixU().leftCols(rank);
  Matrix scaled = u * s.head(rank).asDiagonal();
  return {std::move(u), std::move(scaled)};
}

}  // namespace

// The span is carried with its singular values rather than orthonormalized,
// so directions that are genuinely small are not inflated together with
// their rounding error before the next rank decision.
Matrix invariant_closure(const Matrix& start, const std::vector<Matrix>& ops) {
  ScaledRange w = scaled_range(start);
  for (;;) {
    const Eigen::Index r = w.scaled.cols();
    if (r == 0) return w.orthonormal;
    Matrix candidates(w.scaled.rows(), r * static_cast<Eigen::Index>(ops.size() + 1));
    candidates.leftCols(r) = w.scaled;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      candidates.middleCols(r * static_cast<Eigen::Index>(i + 1), r) = ops[i] * w.scaled;
    }
    ScaledRange next = scaled_range(candidates);
    if (next.scaled.cols() == r) return next.orthonormal;
    w = std::move(next);
  }
}

}  // namespace rudin::numerics
