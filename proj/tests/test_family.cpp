#include <gtest/gtest.h>

#include <set>

#include "rudin/error.hpp"
#include "rudin/family.hpp"
#include "rudin/fixtures.hpp"
#include "rudin/random.hpp"

using namespace rudin;

namespace {

const DiscPoint a{0.5, 0.0};
const DiscPoint c{0.0, 0.5};

VariableSpec var(DiscPoint p, MultiplicityProfile prof, Monotonicity m = Monotonicity::None) {
  return VariableSpec{m, {PrimeEntry{p, std::move(prof)}}};
}

// Every choice of one prime per variable, as index vectors.
std::vector<std::vector<std::size_t>> all_choices(const RudinFamily& fam) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (std::size_t i = 0; i < fam.n(); ++i) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& prefix : out) {
      for (std::size_t p = 0; p < fam.variable(i).primes.size(); ++p) {
        auto v = prefix;
        v.push_back(p);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

bool all_positive(const RudinFamily& fam, const std::vector<std::size_t>& idx, int k) {
  for (std::size_t i = 0; i < fam.n(); ++i) {
    if (fam.order_at(i, idx[i], k) == 0) return false;
  }
  return true;
}

std::set<std::vector<std::size_t>> brute_lambda(const RudinFamily& fam) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& idx : all_choices(fam)) {
    for (int k = fam.first_column(); k <= fam.last_column(); ++k) {
      if (all_positive(fam, idx, k)) out.insert(idx);
    }
  }
  return out;
}

std::set<OrderTuple> brute_orders(const RudinFamily& fam, const std::vector<std::size_t>& idx) {
  std::set<OrderTuple> out;
  for (int k = fam.first_column(); k <= fam.last_column(); ++k) {
    if (!all_positive(fam, idx, k)) continue;
    std::vector<int> l;
    for (std::size_t i = 0; i < fam.n(); ++i) l.push_back(fam.order_at(i, idx[i], k));
    out.insert(OrderTuple(l));
  }
  return out;
}

}  // namespace

TEST(MultiplicityProfile, TailsAndWindow) {
  const MultiplicityProfile p(2, {3, 1}, 5);
  EXPECT_EQ(p.at(-10, 0), 2);
  EXPECT_EQ(p.at(-1, 0), 2);
  EXPECT_EQ(p.at(0, 0), 3);
  EXPECT_EQ(p.at(1, 0), 1);
  EXPECT_EQ(p.at(2, 0), 5);
  EXPECT_EQ(p.at(1000, 0), 5);
  EXPECT_THROW(MultiplicityProfile(-1, {}, 0), Error);
}

TEST(RudinFamily, Validation) {
  EXPECT_THROW(RudinFamily(0, 1, {}), Error);
  EXPECT_THROW(RudinFamily(2, 1, {var(a, {0, {}, 0})}), Error);
  EXPECT_THROW(RudinFamily(0, 1, {var(a, {0, {1}, 0})}), Error);
  VariableSpec twice{Monotonicity::None, {PrimeEntry{a, {0, {1}, 0}}, PrimeEntry{a, {1, {1}, 0}}}};
  EXPECT_THROW(RudinFamily(0, 0, {twice}), Error);
}

TEST(RudinFamily, PhiFromProfiles) {
  const RudinFamily fam(0, 1, {VariableSpec{Monotonicity::None, {PrimeEntry{a, {1, {2, 0}, 3}}, PrimeEntry{c, {0, {1, 1}, 0}}}}});
  EXPECT_EQ(fam.phi(0, -5), (BlaschkeProduct{{a, 1}}));
  EXPECT_EQ(fam.phi(0, 0), (BlaschkeProduct{{a, 2}, {c, 1}}));
  EXPECT_EQ(fam.phi(0, 1), (BlaschkeProduct{{c, 1}}));
  EXPECT_EQ(fam.phi(0, 9), (BlaschkeProduct{{a, 3}}));
}

TEST(Lambda, Examples) {
  const RudinFamily joint(0, 0, {var(a, {0, {1}, 0}), var(c, {0, {2}, 0})});
  const auto l = lambda_classes(joint);
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l[0].primes, (std::vector<DiscPoint>{a, c}));

  EXPECT_TRUE(lambda_classes(fixtures::empty_overlap()).empty());
}

TEST(Lambda, DistinctPointsAreLowerTriangle) {
  // variable 0 decreasing, variable 1 increasing: a_{0,k1} and a_{1,k2} meet iff k2 <= k1
  const RudinFamily fam = fixtures::distinct_points(2, {1}, -3, 3);
  const auto l = lambda_classes(fam);
  std::set<std::pair<int, int>> got;
  for (const auto& t : l) got.insert({static_cast<int>(t.index[0]), static_cast<int>(t.index[1])});
  std::set<std::pair<int, int>> expect;
  for (int k1 = 0; k1 < 7; ++k1) {
    for (int k2 = 0; k2 <= k1; ++k2) expect.insert({k1, k2});
  }
  EXPECT_EQ(got, expect);
}

TEST(ZeroSet, Examples) {
  const RudinFamily everywhere(0, 0, {var(a, {1, {1}, 1}), var(c, {1, {1}, 1})});
  const auto z = zero_set(everywhere, make_prime_tuple(everywhere, {a, c}));
  EXPECT_TRUE(z.left_unbounded);
  EXPECT_TRUE(z.right_unbounded);

  const auto ce = fixtures::counterexample(0);
  const auto zc = zero_set(ce.family, make_prime_tuple(ce.family, {ce.a, ce.c}));
  EXPECT_EQ(zc, (ZeroSet{false, {0, 1, 2, 3}, false}));

  const auto shifted = fixtures::counterexample(5);
  const auto zs = zero_set(shifted.family, make_prime_tuple(shifted.family, {shifted.a, shifted.c}));
  EXPECT_EQ(zs, (ZeroSet{false, {5, 6, 7, 8}, false}));
}

TEST(ZeroSet, MonotoneFamilyIsFiniteInterval) {
  random::Engine rng(17);
  for (int t = 0; t < 50; ++t) {
    const auto fam = random::monotone_family(rng, 2, 6, 2, 3, {1});
    for (const auto& tup : lambda_classes(fam)) {
      const auto z = zero_set(fam, tup);
      EXPECT_FALSE(z.left_unbounded);
      EXPECT_FALSE(z.right_unbounded);
      ASSERT_FALSE(z.indices.empty());
      for (std::size_t j = 1; j < z.indices.size(); ++j) EXPECT_EQ(z.indices[j], z.indices[j - 1] + 1);
    }
  }
}

TEST(OrderTuples, CounterexampleCollapses) {
  const auto ce = fixtures::counterexample(0);
  const auto s = order_tuples(ce.family, make_prime_tuple(ce.family, {ce.a, ce.c}));
  EXPECT_EQ((std::set<OrderTuple>(s.begin(), s.end())), (std::set<OrderTuple>{{2, 1}, {1, 1}, {1, 2}}));
}

TEST(OrderTuples, ConstantProfiles) {
  const RudinFamily fam(0, 2, {var(a, {1, {1, 1, 1}, 1}), var(c, {1, {1, 1, 1}, 1})});
  const auto s = order_tuples(fam, make_prime_tuple(fam, {a, c}));
  EXPECT_EQ((std::set<OrderTuple>(s.begin(), s.end())), (std::set<OrderTuple>{{1, 1}}));
}

TEST(OrderTuples, NotInLambda) {
  const auto fam = fixtures::empty_overlap();
  PrimeTuple t{{0, 0}, {fam.variable(0).primes[0].prime, fam.variable(1).primes[0].prime}};
  try {
    order_tuples(fam, t);
    FAIL() << "expected TupleNotInLambda";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TupleNotInLambda);
  }
}

TEST(OrderTuples, MatchBruteForceOnRandomFamilies) {
  random::Engine rng(23);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 3;
    const auto fam = random::family(rng, n, 1 + static_cast<int>(rng() % 6), 2, 3);
    const auto l = lambda_classes(fam);
    std::set<std::vector<std::size_t>> got;
    for (const auto& tup : l) {
      got.insert(tup.index);
      const auto s = order_tuples(fam, tup);
      EXPECT_EQ((std::set<OrderTuple>(s.begin(), s.end())), brute_orders(fam, tup.index));
      const auto z = zero_set(fam, tup);
      EXPECT_EQ(z.left_unbounded, all_positive(fam, tup.index, fam.first_column()));
      EXPECT_EQ(z.right_unbounded, all_positive(fam, tup.index, fam.last_column()));
      for (int k = fam.k_min(); k <= fam.k_max(); ++k) {
        const bool listed = std::find(z.indices.begin(), z.indices.end(), k) != z.indices.end();
        EXPECT_EQ(listed, all_positive(fam, tup.index, k));
      }
    }
    EXPECT_EQ(got, brute_lambda(fam));
  }
}
