#include "rudin/pareto.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "rudin/error.hpp"

namespace rudin {

std::string MinimalRep::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < tuples.size(); ++i) os << (i ? ", " : "") << tuples[i].to_string();
  os << "}";
  return os.str();
}

MinimalRep pareto_maximal(std::span<const OrderTuple> s) {
  if (s.empty()) throw Error(ErrorCode::EmptyInput, "pareto_maximal needs at least one tuple");
  const std::size_t n = s.front().size();
  if (std::any_of(s.begin(), s.end(), [n](const OrderTuple& t) { return t.size() != n; })) {
    throw Error(ErrorCode::InvalidArgument, "order tuples of different lengths");
  }

  std::vector<OrderTuple> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // A dominator of t is lexicographically larger, so it precedes t; checking
  // against the kept tuples suffices by transitivity.
  MinimalRep rep;
  for (const auto& t : sorted) {
    const bool dominated = std::any_of(rep.tuples.begin(), rep.tuples.end(),
                                       [&](const OrderTuple& kept) { return t.dominated_by(kept); });
    if (!dominated) rep.tuples.push_back(t);
  }
  return rep;
}

bool is_antichain(std::span<const OrderTuple> s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      bool less = false;
      bool greater = false;
      for (std::size_t i = 0; i < s[a].size(); ++i) {
        less = less || s[a][i] < s[b][i];
        greater = greater || s[a][i] > s[b][i];
      }
      if (!less || !greater) return false;
    }
  }
  return true;
}

}  // namespace rudin
