#include "rudin/family.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rudin/error.hpp"

namespace rudin {

MultiplicityProfile::MultiplicityProfile(int left_tail, std::vector<int> window, int right_tail)
    : left_tail_(left_tail), window_(std::move(window)), right_tail_(right_tail) {
  const bool negative = left_tail_ < 0 || right_tail_ < 0 ||
                        std::any_of(window_.begin(), window_.end(), [](int v) { return v < 0; });
  if (negative) throw Error(ErrorCode::InvalidArgument, "profile entries must be >= 0");
}

int MultiplicityProfile::at(int k, int k_min) const noexcept {
  if (k < k_min) return left_tail_;
  const auto offset = static_cast<std::size_t>(k - k_min);
  if (offset >= window_.size()) return right_tail_;
  return window_[offset];
}

std::string_view to_string(Monotonicity m) noexcept {
  switch (m) {
    case Monotonicity::Increasing: return "increasing";
    case Monotonicity::Decreasing: return "decreasing";
    case Monotonicity::None: break;
  }
  return "none";
}

RudinFamily::RudinFamily(int k_min, int k_max, std::vector<VariableSpec> variables, bool truncated)
    : k_min_(k_min), k_max_(k_max), variables_(std::move(variables)), truncated_(truncated) {
  if (variables_.empty()) throw Error(ErrorCode::InvalidArgument, "a family needs n >= 1 variables");
  if (k_min_ > k_max_) throw Error(ErrorCode::InvalidArgument, "window has kMin > kMax");
  const auto width = static_cast<std::size_t>(k_max_ - k_min_ + 1);
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    std::set<DiscPoint> seen;
    for (const auto& entry : variables_[i].primes) {
      if (entry.profile.window().size() != width) {
        std::ostringstream os;
        os << "variable " << i + 1 << ", prime " << entry.prime.to_string() << ": window has "
           << entry.profile.window().size() << " entries, expected " << width;
        throw Error(ErrorCode::InvalidArgument, os.str());
      }
      if (!seen.insert(entry.prime).second) {
        throw Error(ErrorCode::InvalidArgument, "variable " + std::to_string(i + 1) +
                                                    " repeats prime " + entry.prime.to_string());
      }
    }
  }
}

int RudinFamily::order_at(std::size_t i, std::size_t p, int k) const {
  return variables_.at(i).primes.at(p).profile.at(k, k_min_);
}

BlaschkeProduct RudinFamily::phi(std::size_t i, int k) const {
  BlaschkeProduct::ZeroMap zeros;
  for (const auto& entry : variables_.at(i).primes) {
    if (const int m = entry.profile.at(k, k_min_); m > 0) zeros.emplace(entry.prime, m);
  }
  return BlaschkeProduct(std::move(zeros));
}

std::string PrimeTuple::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < primes.size(); ++i) os << (i ? ", " : "") << primes[i].to_string();
  os << ")";
  return os.str();
}

bool display_less(const PrimeTuple& a, const PrimeTuple& b) noexcept {
  return std::lexicographical_compare(
      a.primes.begin(), a.primes.end(), b.primes.begin(), b.primes.end(),
      [](const DiscPoint& x, const DiscPoint& y) { return display_less(x, y); });
}

bool OrderTuple::dominated_by(const OrderTuple& other) const noexcept {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < l_.size(); ++i) {
    if (l_[i] > other.l_[i]) return false;
  }
  return true;
}

std::string OrderTuple::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < l_.size(); ++i) os << (i ? "," : "") << l_[i];
  os << ")";
  return os.str();
}

std::string ZeroSet::to_string() const {
  std::ostringstream os;
  os << "{";
  if (left_unbounded) os << "... ";
  for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? ", " : "") << indices[i];
  if (right_unbounded) os << " ...";
  os << "}";
  return os.str();
}

namespace {

// Column c in [0, width+1] is k = first_column() + c.
std::vector<bool> support(const RudinFamily& fam, std::size_t i, std::size_t p) {
  const int first = fam.first_column();
  std::vector<bool> s(static_cast<std::size_t>(fam.last_column() - first + 1));
  for (std::size_t c = 0; c < s.size(); ++c) s[c] = fam.order_at(i, p, first + static_cast<int>(c)) > 0;
  return s;
}

void enumerate(const RudinFamily& fam, const std::vector<std::vector<std::vector<bool>>>& supports,
               std::size_t i, std::vector<bool>& mask, std::vector<std::size_t>& chosen,
               std::vector<PrimeTuple>& out) {
  if (i == fam.n()) {
    PrimeTuple t;
    t.index = chosen;
    for (std::size_t v = 0; v < chosen.size(); ++v) t.primes.push_back(fam.variable(v).primes[chosen[v]].prime);
    out.push_back(std::move(t));
    return;
  }
  for (std::size_t p = 0; p < supports[i].size(); ++p) {
    std::vector<bool> next(mask.size());
    bool any = false;
    for (std::size_t c = 0; c < mask.size(); ++c) {
      next[c] = mask[c] && supports[i][p][c];
      any = any || next[c];
    }
    if (!any) continue;
    chosen.push_back(p);
    enumerate(fam, supports, i + 1, next, chosen, out);
    chosen.pop_back();
  }
}

void check_tuple(const RudinFamily& fam, const PrimeTuple& t) {
  bool ok = t.index.size() == fam.n() && t.primes.size() == fam.n();
  for (std::size_t i = 0; ok && i < fam.n(); ++i) {
    ok = t.index[i] < fam.variable(i).primes.size() &&
         fam.variable(i).primes[t.index[i]].prime == t.primes[i];
  }
  if (!ok) throw Error(ErrorCode::TupleNotInLambda, t.to_string() + " does not name primes of the family");
}

bool jointly_positive(const RudinFamily& fam, const PrimeTuple& t, int k) {
  for (std::size_t i = 0; i < fam.n(); ++i) {
    if (fam.order_at(i, t.index[i], k) < 1) return false;
  }
  return true;
}

}  // namespace

std::vector<PrimeTuple> lambda_classes(const RudinFamily& fam) {
  std::vector<std::vector<std::vector<bool>>> supports(fam.n());
  for (std::size_t i = 0; i < fam.n(); ++i) {
    for (std::size_t p = 0; p < fam.variable(i).primes.size(); ++p) supports[i].push_back(support(fam, i, p));
  }
  std::vector<bool> mask(static_cast<std::size_t>(fam.last_column() - fam.first_column() + 1), true);
  std::vector<std::size_t> chosen;
  std::vector<PrimeTuple> out;
  enumerate(fam, supports, 0, mask, chosen, out);
  return out;
}

ZeroSet zero_set(const RudinFamily& fam, const PrimeTuple& t) {
  check_tuple(fam, t);
  ZeroSet z;
  z.left_unbounded = jointly_positive(fam, t, fam.first_column());
  z.right_unbounded = jointly_positive(fam, t, fam.last_column());
  for (int k = fam.k_min(); k <= fam.k_max(); ++k) {
    if (jointly_positive(fam, t, k)) z.indices.push_back(k);
  }
  if (z.empty()) throw Error(ErrorCode::TupleNotInLambda, t.to_string() + " never occurs jointly");
  return z;
}

std::vector<OrderTuple> order_tuples(const RudinFamily& fam, const PrimeTuple& t) {
  const ZeroSet z = zero_set(fam, t);
  auto column = [&](int k) {
    std::vector<int> l(fam.n());
    for (std::size_t i = 0; i < fam.n(); ++i) l[i] = fam.order_at(i, t.index[i], k);
    return OrderTuple(std::move(l));
  };
  std::vector<OrderTuple> out;
  if (z.left_unbounded) out.push_back(column(fam.first_column()));
  for (int k : z.indices) out.push_back(column(k));
  if (z.right_unbounded) out.push_back(column(fam.last_column()));
  return out;
}

PrimeTuple make_prime_tuple(const RudinFamily& fam, const std::vector<DiscPoint>& points) {
  if (points.size() != fam.n()) {
    throw Error(ErrorCode::TupleNotInLambda, "tuple length differs from the number of variables");
  }
  PrimeTuple t;
  t.primes = points;
  for (std::size_t i = 0; i < fam.n(); ++i) {
    const auto& primes = fam.variable(i).primes;
    const auto it = std::find_if(primes.begin(), primes.end(),
                                 [&](const PrimeEntry& e) { return e.prime == points[i]; });
    if (it == primes.end()) {
      throw Error(ErrorCode::TupleNotInLambda,
                  points[i].to_string() + " is not a prime of variable " + std::to_string(i + 1));
    }
    t.index.push_back(static_cast<std::size_t>(it - primes.begin()));
  }
  return t;
}

}  // namespace rudin
