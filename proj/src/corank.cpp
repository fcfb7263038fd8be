#include "rudin/corank.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "rudin/error.hpp"

namespace rudin {

std::string_view to_string(CorankMethod m) noexcept {
  switch (m) {
    case CorankMethod::General: return "general";
    case CorankMethod::Monotone: return "monotone";
    case CorankMethod::IzuchiPublished: return "izuchi_published";
  }
  return "unknown";
}

const TupleReport* CorankReport::find(const std::vector<DiscPoint>& primes) const {
  const auto it = std::find_if(per_tuple.begin(), per_tuple.end(),
                               [&](const TupleReport& r) { return r.tuple.primes == primes; });
  return it == per_tuple.end() ? nullptr : &*it;
}

namespace {

void finish(CorankReport& report) {
  std::sort(report.per_tuple.begin(), report.per_tuple.end(),
            [](const TupleReport& a, const TupleReport& b) { return display_less(a.tuple, b.tuple); });
  report.overall = 0;
  for (const auto& t : report.per_tuple) report.overall = std::max(report.overall, t.count);
}

// Per-variable phi_{i,k} for k in [first_column, last_column].
class PhiTable {
 public:
  explicit PhiTable(const RudinFamily& fam) : first_(fam.first_column()), rows_(fam.n()) {
    for (std::size_t i = 0; i < fam.n(); ++i) {
      for (int k = fam.first_column(); k <= fam.last_column(); ++k) rows_[i].push_back(fam.phi(i, k));
    }
  }

  // Clamped: outside the stored range phi is constant.
  const BlaschkeProduct& at(std::size_t i, int k) const {
    const int last = first_ + static_cast<int>(rows_[i].size()) - 1;
    return rows_[i][static_cast<std::size_t>(std::clamp(k, first_, last) - first_)];
  }

 private:
  int first_;
  std::vector<std::vector<BlaschkeProduct>> rows_;
};

std::vector<bool> membership(std::size_t n, const std::vector<std::size_t>& increasing) {
  if (n < 2) throw Error(ErrorCode::BadVariablePartition, "a monotone partition needs n >= 2");
  std::vector<bool> in_a(n, false);
  for (std::size_t i : increasing) {
    if (i >= n) throw Error(ErrorCode::BadVariablePartition, "variable index out of range");
    if (in_a[i]) throw Error(ErrorCode::BadVariablePartition, "variable listed twice");
    in_a[i] = true;
  }
  if (increasing.empty() || increasing.size() == n) {
    throw Error(ErrorCode::BadVariablePartition, "A must be a proper nonempty subset of the variables");
  }
  return in_a;
}

}  // namespace

CorankReport corank_general(const RudinFamily& fam) {
  CorankReport report;
  report.method = CorankMethod::General;
  report.truncated_window = fam.truncated();
  for (auto& t : lambda_classes(fam)) {
    TupleReport r;
    r.zero_set = zero_set(fam, t);
    r.minimal_rep = pareto_maximal(order_tuples(fam, t));
    r.count = static_cast<int>(r.minimal_rep.size());
    r.tuple = std::move(t);
    report.per_tuple.push_back(std::move(r));
  }
  finish(report);
  return report;
}

MonotoneCheck validate_monotone(const RudinFamily& fam, const std::vector<std::size_t>& increasing) {
  const auto in_a = membership(fam.n(), increasing);
  MonotoneCheck check;
  auto fail = [&](std::size_t i, const PrimeEntry& e, const std::string& why) {
    check.ok = false;
    std::ostringstream os;
    os << "variable " << i + 1 << " (" << (in_a[i] ? "increasing" : "decreasing") << "), prime "
       << e.prime.to_string() << ": " << why;
    check.diagnostics.push_back(os.str());
  };
  for (std::size_t i = 0; i < fam.n(); ++i) {
    for (const auto& e : fam.variable(i).primes) {
      int prev = e.profile.at(fam.first_column(), fam.k_min());
      for (int k = fam.k_min(); k <= fam.last_column(); ++k) {
        const int cur = e.profile.at(k, fam.k_min());
        if (in_a[i] && cur < prev) {
          fail(i, e, "order drops from " + std::to_string(prev) + " to " + std::to_string(cur) +
                         " at k=" + std::to_string(k));
          break;
        }
        if (!in_a[i] && cur > prev) {
          fail(i, e, "order rises from " + std::to_string(prev) + " to " + std::to_string(cur) +
                         " at k=" + std::to_string(k));
          break;
        }
        prev = cur;
      }
      if (in_a[i] && e.profile.left_tail() != 0) {
        fail(i, e, "leftTail " + std::to_string(e.profile.left_tail()) +
                       " > 0 makes it a common factor of the whole sequence");
      }
      if (!in_a[i] && e.profile.right_tail() != 0) {
        fail(i, e, "rightTail " + std::to_string(e.profile.right_tail()) +
                       " > 0 makes it a common factor of the whole sequence");
      }
    }
  }
  return check;
}

CorankReport corank_monotone(const RudinFamily& fam, const std::vector<std::size_t>& increasing) {
  const auto check = validate_monotone(fam, increasing);
  if (!check) {
    std::string msg = "family is not monotone for the given partition";
    for (const auto& d : check.diagnostics) msg += "; " + d;
    throw Error(ErrorCode::NotMonotone, msg);
  }
  const auto in_a = membership(fam.n(), increasing);
  const PhiTable phi(fam);

  auto prime = [](const DiscPoint& p) { return BlaschkeProduct::factor(p); };

  CorankReport report;
  report.method = CorankMethod::Monotone;
  report.truncated_window = fam.truncated();

  for (auto& t : lambda_classes(fam)) {
    // r1: first k where every increasing variable contains its prime,
    // r2: last k where every decreasing variable does.
    auto all_divide = [&](int k, bool side_a) {
      for (std::size_t i = 0; i < fam.n(); ++i) {
        if (in_a[i] == side_a && !divides(prime(t.primes[i]), phi.at(i, k))) return false;
      }
      return true;
    };
    int r1 = fam.k_min();
    while (!all_divide(r1, true)) ++r1;
    int r2 = fam.k_max();
    while (!all_divide(r2, false)) --r2;

    TupleReport r;
    r.zero_set = zero_set(fam, t);

    std::vector<int> i_set;
    for (int k = r1; k <= r2; ++k) {
      for (std::size_t i = 0; i < fam.n(); ++i) {
        if (!in_a[i]) continue;
        const BlaschkeProduct zeta = quotient(phi.at(i, k), phi.at(i, k - 1));
        if (divides(prime(t.primes[i]), zeta)) {
          i_set.push_back(k);
          break;
        }
      }
    }

    // k_j counts when some B variable loses a zero of its prime before k_{j+1}; k_m always counts
    std::vector<int> kept;
    for (std::size_t j = 0; j + 1 < i_set.size(); ++j) {
      for (std::size_t i = 0; i < fam.n(); ++i) {
        if (in_a[i]) continue;
        const BlaschkeProduct eta = quotient(phi.at(i, i_set[j]), phi.at(i, i_set[j + 1]));
        if (divides(prime(t.primes[i]), eta)) {
          kept.push_back(i_set[j]);
          break;
        }
      }
    }
    if (!i_set.empty()) kept.push_back(i_set.back());
    for (int k : kept) {
      std::vector<int> l;
      for (std::size_t i = 0; i < fam.n(); ++i) l.push_back(fam.order_at(i, t.index[i], k));
      r.minimal_rep.tuples.emplace_back(std::move(l));
    }
    std::sort(r.minimal_rep.tuples.begin(), r.minimal_rep.tuples.end(), std::greater<>());
    r.count = static_cast<int>(kept.size());
    r.i_set = std::move(i_set);
    r.tuple = std::move(t);
    report.per_tuple.push_back(std::move(r));
  }
  finish(report);
  return report;
}

CorankReport izuchi_published_corank(const RudinFamily& fam) {
  if (fam.n() != 2) throw Error(ErrorCode::NotTwoVariables, "the published formula is stated for n = 2");
  const auto check = validate_monotone(fam, {1});
  if (!check) {
    std::string msg = "expected Phi decreasing and Psi increasing";
    for (const auto& d : check.diagnostics) msg += "; " + d;
    throw Error(ErrorCode::NotMonotone, msg);
  }
  const PhiTable phi(fam);

  CorankReport report;
  report.method = CorankMethod::IzuchiPublished;
  report.truncated_window = fam.truncated();
  for (auto& t : lambda_classes(fam)) {
    const auto a = BlaschkeProduct::factor(t.primes[0]);
    const auto b = BlaschkeProduct::factor(t.primes[1]);
    // zeta_m = phi_m / phi_{m+1}, xi_m = psi_m / psi_{m-1}; both are units
    // outside [first_column, last_column].
    int count = 0;
    for (int m = fam.first_column(); m <= fam.last_column(); ++m) {
      const auto zeta = quotient(phi.at(0, m), phi.at(0, m + 1));
      const auto xi = quotient(phi.at(1, m), phi.at(1, m - 1));
      if (divides(a, zeta) && divides(b, xi)) ++count;
    }
    TupleReport r;
    r.zero_set = zero_set(fam, t);
    r.count = count;
    r.tuple = std::move(t);
    report.per_tuple.push_back(std::move(r));
  }
  finish(report);
  return report;
}

std::vector<std::size_t> declared_increasing(const RudinFamily& fam) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fam.n(); ++i) {
    if (fam.variable(i).monotone == Monotonicity::Increasing) out.push_back(i);
  }
  return out;
}

}  // namespace rudin
