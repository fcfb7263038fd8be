#include "rudin/numerics/tensor_module.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "rudin/error.hpp"

namespace rudin::numerics {

namespace {

using MultiIndex = std::vector<int>;

// T_i[p, q] = F_i(p_i, q_i) when p and q agree off coordinate i.
void assemble_shifts(TensorModule& m, const std::vector<Matrix>& factor_shifts) {
  std::map<MultiIndex, Eigen::Index> position;
  for (std::size_t p = 0; p < m.lattice.size(); ++p) position.emplace(m.lattice[p], static_cast<Eigen::Index>(p));
  const auto d = static_cast<Eigen::Index>(m.dim());
  m.adjoint_shifts.assign(m.n, Matrix::Zero(d, d));
  for (std::size_t i = 0; i < m.n; ++i) {
    const Matrix& f = factor_shifts[i];
    for (std::size_t q = 0; q < m.lattice.size(); ++q) {
      MultiIndex target = m.lattice[q];
      for (int r = 0; r < f.rows(); ++r) {
        target[i] = r;
        if (const auto it = position.find(target); it != position.end()) {
          m.adjoint_shifts[i](it->second, static_cast<Eigen::Index>(q)) = f(r, m.lattice[q][i]);
        }
      }
    }
  }
}

void box(const std::vector<int>& sizes, std::set<MultiIndex>& out) {
  if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s <= 0; })) return;
  MultiIndex idx(sizes.size(), 0);
  for (;;) {
    out.insert(idx);
    std::size_t c = sizes.size();
    while (c > 0) {
      --c;
      if (++idx[c] < sizes[c]) break;
      idx[c] = 0;
      if (c == 0) return;
    }
    if (sizes.empty()) return;
  }
}

std::map<MultiIndex, Eigen::Index> positions(const TensorModule& m) {
  std::map<MultiIndex, Eigen::Index> pos;
  for (std::size_t p = 0; p < m.lattice.size(); ++p) pos.emplace(m.lattice[p], static_cast<Eigen::Index>(p));
  return pos;
}

Complex conj_point(const TensorModule& m, std::size_t i) { return std::conj((*m.point)[i].value()); }

}  // namespace

std::size_t TensorModule::ambient_dim() const {
  std::size_t total = 1;
  for (const auto& f : factors) total *= static_cast<std::size_t>(f.dim());
  return total;
}

std::size_t TensorModule::ambient_index(const std::vector<int>& multi_index) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    idx = idx * static_cast<std::size_t>(factors[i].dim()) + static_cast<std::size_t>(multi_index[i]);
  }
  return idx;
}

Matrix TensorModule::embed(const Matrix& coords) const {
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(ambient_dim()), coords.cols());
  for (std::size_t p = 0; p < lattice.size(); ++p) {
    out.row(static_cast<Eigen::Index>(ambient_index(lattice[p]))) = coords.row(static_cast<Eigen::Index>(p));
  }
  return out;
}

Vector TensorModule::tensor_coefficients(std::size_t b) const {
  Vector acc = Vector::Ones(1);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector col = factors[i].basis.col(lattice.at(b)[i]);
    Vector next(acc.size() * col.size());
    for (Eigen::Index a = 0; a < acc.size(); ++a) next.segment(a * col.size(), col.size()) = acc[a] * col;
    acc = std::move(next);
  }
  return acc;
}

TensorModule assemble_point_module(const std::vector<DiscPoint>& alpha, std::span<const OrderTuple> tuples) {
  int truncation = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    int l = 1;
    for (const auto& t : tuples) {
      if (t.size() == alpha.size()) l = std::max(l, t[i]);
    }
    truncation = std::max(truncation, adaptive_truncation(std::abs(alpha[i].value()), l, l));
  }
  return assemble_point_module(alpha, tuples, truncation);
}

TensorModule assemble_point_module(const std::vector<DiscPoint>& alpha, std::span<const OrderTuple> tuples,
                                   int truncation) {
  const std::size_t n = alpha.size();
  if (n < 1 || n > 3) throw Error(ErrorCode::InvalidArgument, "point modules support 1 <= n <= 3");
  if (tuples.empty()) throw Error(ErrorCode::InvalidArgument, "the tuple set A is empty");
  long volume = 0;
  std::vector<int> longest(n, 0);
  for (const auto& t : tuples) {
    if (t.size() != n) throw Error(ErrorCode::InvalidArgument, "tuple " + t.to_string() + " has the wrong length");
    long v = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i] < 1) throw Error(ErrorCode::InvalidArgument, "tuple " + t.to_string() + " has an entry < 1");
      v *= t[i];
      longest[i] = std::max(longest[i], t[i]);
    }
    volume += v;
    if (volume > kDeskScaleCap) {
      throw Error(ErrorCode::DeskScaleExceeded,
                  "total box volume exceeds " + std::to_string(kDeskScaleCap));
    }
  }

  TensorModule m;
  m.n = n;
  m.point = alpha;
  std::vector<Matrix> shifts;
  for (std::size_t i = 0; i < n; ++i) {
    m.factors.push_back(single_point_basis(alpha[i], longest[i], truncation));
    shifts.push_back(compressed_adjoint_shift(m.factors.back()));
  }
  std::set<MultiIndex> points;
  for (const auto& t : tuples) box(t.values(), points);
  m.lattice.assign(points.begin(), points.end());
  assemble_shifts(m, shifts);
  return m;
}

TensorModule assemble_tensor_product(std::vector<ModelSpace> factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "no factors");
  TensorModule m;
  m.n = factors.size();
  std::vector<DiscPoint> point;
  std::vector<int> sizes;
  std::vector<Matrix> shifts;
  for (const auto& f : factors) {
    if (f.generator.zeros().size() == 1) point.push_back(f.generator.zeros().begin()->first);
    sizes.push_back(f.dim());
    shifts.push_back(compressed_adjoint_shift(f));
  }
  if (point.size() == factors.size()) m.point = std::move(point);
  m.factors = std::move(factors);
  std::set<MultiIndex> points;
  box(sizes, points);
  m.lattice.assign(points.begin(), points.end());
  assemble_shifts(m, shifts);
  return m;
}

int nakayama_corank(const TensorModule& m) {
  if (!m.single_point()) throw Error(ErrorCode::NotSinglePoint, "module is not supported at a single point");
  const auto d = static_cast<Eigen::Index>(m.dim());
  if (d == 0) return 0;
  Matrix stacked(d, d * static_cast<Eigen::Index>(m.n));
  for (std::size_t i = 0; i < m.n; ++i) {
    stacked.middleCols(d * static_cast<Eigen::Index>(i), d) =
        m.adjoint_shifts[i] - conj_point(m, i) * Matrix::Identity(d, d);
  }
  const Eigen::JacobiSVD<Matrix> svd(stacked);
  const auto& s = svd.singularValues();
  const double cut = kRankThreshold * std::max(1.0, s.size() > 0 ? s[0] : 0.0);
  int rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) rank += s[k] > cut ? 1 : 0;
  return static_cast<int>(d) - rank;
}

KrylovResult krylov_generated(const TensorModule& m, const Matrix& vectors) {
  if (vectors.rows() != static_cast<Eigen::Index>(m.dim())) {
    throw Error(ErrorCode::VectorOutsideModule, "vectors have " + std::to_string(vectors.rows()) +
                                                    " coordinates, module has dimension " +
                                                    std::to_string(m.dim()));
  }
  const Matrix closure = invariant_closure(vectors, m.adjoint_shifts);
  KrylovResult r;
  r.achieved_dim = static_cast<int>(closure.cols());
  r.generated = r.achieved_dim == static_cast<int>(m.dim());
  return r;
}

KrylovResult krylov_generated_ambient(const TensorModule& m, const Matrix& vectors) {
  if (vectors.rows() != static_cast<Eigen::Index>(m.ambient_dim())) {
    throw Error(ErrorCode::VectorOutsideModule, "vectors do not have ambient dimension");
  }
  Matrix coords(static_cast<Eigen::Index>(m.dim()), vectors.cols());
  for (std::size_t p = 0; p < m.lattice.size(); ++p) {
    coords.row(static_cast<Eigen::Index>(p)) = vectors.row(static_cast<Eigen::Index>(m.ambient_index(m.lattice[p])));
  }
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    const double total = vectors.col(c).norm();
    const double inside = coords.col(c).norm();
    const double off = std::sqrt(std::max(0.0, total * total - inside * inside));
    if (off > kTolerance * std::max(1.0, total)) {
      throw Error(ErrorCode::VectorOutsideModule,
                  "column " + std::to_string(c) + " has residual " + std::to_string(off) + " off the module");
    }
  }
  return krylov_generated(m, coords);
}

Matrix compress(const TensorModule& from, const Matrix& coords, const TensorModule& to) {
  if (!from.single_point() || !to.single_point() || *from.point != *to.point || from.n != to.n ||
      from.factors.front().truncation != to.factors.front().truncation) {
    throw Error(ErrorCode::InvalidArgument, "compression needs single-point modules over the same point");
  }
  const auto src = positions(from);
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(to.dim()), coords.cols());
  for (std::size_t p = 0; p < to.lattice.size(); ++p) {
    if (const auto it = src.find(to.lattice[p]); it != src.end()) {
      out.row(static_cast<Eigen::Index>(p)) = coords.row(it->second);
    }
  }
  return out;
}

GeneratorCertificate randomized_min_generators(const TensorModule& m, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  GeneratorCertificate cert;
  cert.seed = seed;
  cert.trials = trials;
  cert.target_dim = static_cast<int>(m.dim());
  const auto d = static_cast<Eigen::Index>(m.dim());
  if (d == 0) {
    cert.vectors = Matrix(0, 0);
    return cert;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  for (Eigen::Index r = 1; r <= d; ++r) {
    int successes = 0;
    int best = 0;
    Matrix found;
    for (int t = 0; t < trials; ++t) {
      Matrix draw(d, r);
      for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < r; ++b) draw(a, b) = Complex(normal(rng), normal(rng));
      }
      const KrylovResult k = krylov_generated(m, draw);
      best = std::max(best, k.achieved_dim);
      if (k.generated) {
        if (successes == 0) found = draw;
        ++successes;
      }
    }
    if (successes > 0) {
      cert.generators = static_cast<int>(r);
      cert.vectors = std::move(found);
      cert.achieved_dim = cert.target_dim;
      cert.successes = successes;
      return cert;
    }
    cert.failures_below = trials;
    cert.achieved_dim = best;
  }
  return cert;  // unreachable: d generic vectors always span
}

double commutator_residual(const TensorModule& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = i + 1; j < m.n; ++j) {
      const Matrix c = m.adjoint_shifts[i] * m.adjoint_shifts[j] - m.adjoint_shifts[j] * m.adjoint_shifts[i];
      if (c.size() > 0) worst = std::max(worst, c.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double nilpotency_residual(const TensorModule& m) {
  if (!m.single_point()) throw Error(ErrorCode::NotSinglePoint, "module is not supported at a single point");
  const auto d = static_cast<Eigen::Index>(m.dim());
  double worst = 0.0;
  for (std::size_t i = 0; i < m.n && d > 0; ++i) {
    const Matrix shifted = m.adjoint_shifts[i] - conj_point(m, i) * Matrix::Identity(d, d);
    Matrix power = Matrix::Identity(d, d);
    for (Eigen::Index k = 0; k < d; ++k) power = power * shifted;
    worst = std::max(worst, power.cwiseAbs().maxCoeff());
  }
  return worst;
}

double invariance_leak(const TensorModule& m) {
  const auto pos = positions(m);
  double worst = 0.0;
  for (std::size_t i = 0; i < m.n; ++i) {
    const Matrix f = compressed_adjoint_shift(m.factors[i]);
    for (const auto& q : m.lattice) {
      MultiIndex target = q;
      for (int r = 0; r < f.rows(); ++r) {
        target[i] = r;
        if (!pos.contains(target)) worst = std::max(worst, std::abs(f(r, q[i])));
      }
    }
  }
  return worst;
}

}  // namespace rudin::numerics
