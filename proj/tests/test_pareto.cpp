#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "rudin/error.hpp"
#include "rudin/pareto.hpp"
#include "rudin/random.hpp"

using namespace rudin;

namespace {

// Quadratic filter: keep t unless some other distinct u dominates it.
std::set<OrderTuple> brute_force(const std::vector<OrderTuple>& s) {
  std::set<OrderTuple> out;
  for (const auto& t : s) {
    bool dominated = false;
    for (const auto& u : s) dominated = dominated || (u != t && t.dominated_by(u));
    if (!dominated) out.insert(t);
  }
  return out;
}

std::set<OrderTuple> as_set(const MinimalRep& r) { return {r.tuples.begin(), r.tuples.end()}; }

}  // namespace

TEST(Pareto, Examples) {
  const std::vector<OrderTuple> s{{2, 1}, {1, 1}, {1, 2}};
  const auto r = pareto_maximal(s);
  EXPECT_EQ(as_set(r), (std::set<OrderTuple>{{2, 1}, {1, 2}}));
  EXPECT_EQ(r.size(), 2u);

  const std::vector<OrderTuple> chain{{1, 1}, {2, 2}};
  EXPECT_EQ(as_set(pareto_maximal(chain)), (std::set<OrderTuple>{{2, 2}}));

  const std::vector<OrderTuple> dup{{1, 2}, {1, 2}, {2, 1}, {1, 1}};
  EXPECT_EQ(pareto_maximal(dup).size(), 2u);
}

TEST(Pareto, Errors) {
  EXPECT_THROW(pareto_maximal(std::vector<OrderTuple>{}), Error);
  const std::vector<OrderTuple> ragged{{1, 2}, {1}};
  EXPECT_THROW(pareto_maximal(ragged), Error);
}

TEST(Pareto, MatchesQuadraticFilter) {
  random::Engine rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 3;
    const auto s = random::order_tuples(rng, n, 1 + rng() % 20, 4);
    const auto r = pareto_maximal(s);
    EXPECT_EQ(as_set(r), brute_force(s));
    EXPECT_EQ(r.size(), as_set(r).size());
    EXPECT_TRUE(is_antichain(r.tuples));
    for (const auto& x : s) {
      EXPECT_TRUE(std::any_of(r.tuples.begin(), r.tuples.end(), [&](const auto& y) { return x.dominated_by(y); }));
    }
  }
}

TEST(Pareto, AddingDominatedTupleChangesNothing) {
  random::Engine rng(5);
  for (int t = 0; t < 100; ++t) {
    auto s = random::order_tuples(rng, 3, 8, 4);
    const auto before = as_set(pareto_maximal(s));
    std::vector<int> smaller = s.front().values();
    for (auto& v : smaller) v = std::max(1, v - 1);
    s.emplace_back(smaller);
    EXPECT_EQ(as_set(pareto_maximal(s)), before);
  }
}

TEST(Pareto, Antichain) {
  const std::vector<OrderTuple> anti{{2, 1}, {1, 2}};
  const std::vector<OrderTuple> chain{{2, 1}, {1, 1}};
  EXPECT_TRUE(is_antichain(anti));
  EXPECT_FALSE(is_antichain(chain));
}
