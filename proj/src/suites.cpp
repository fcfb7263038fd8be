#include "rudin/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rudin/corank.hpp"
#include "rudin/error.hpp"
#include "rudin/fixtures.hpp"
#include "rudin/numerics/tensor_module.hpp"
#include "rudin/numerics/verify.hpp"
#include "rudin/pareto.hpp"
#include "rudin/random.hpp"

namespace rudin::suites {

namespace {

// Counts failures of one law over a battery and reports the first one.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void record(bool ok, const std::string& what = {}) {
    ++total_;
    if (!ok && failures_++ == 0) first_ = what;
  }

  Check result() const {
    std::ostringstream os;
    os << total_ - failures_ << "/" << total_ << " passed";
    if (failures_ > 0) os << "; first failure: " << first_;
    return {name_, failures_ == 0 && total_ > 0, os.str()};
  }

 private:
  std::string name_;
  int total_ = 0;
  int failures_ = 0;
  std::string first_;
};

std::vector<DiscPoint> point_pool(random::Engine& rng, std::size_t size, double radius) {
  std::vector<DiscPoint> pool;
  while (pool.size() < size) {
    const DiscPoint p = random::disc_point(rng, radius);
    if (std::find(pool.begin(), pool.end(), p) == pool.end()) pool.push_back(p);
  }
  return pool;
}

int uniform(random::Engine& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

bool SuiteResult::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

bool PaperExamples::passed() const noexcept {
  return std::all_of(assertions.begin(), assertions.end(), [](const Check& c) { return c.passed; });
}

SuiteResult algebra(std::uint64_t seed, int instances) {
  random::Engine rng(seed);
  const auto pool = point_pool(rng, 6, 0.9);
  Tally idempotent("gcd/lcm idempotent");
  Tally commutative("gcd/lcm commutative");
  Tally associative("gcd/lcm associative");
  Tally bounds("gcd | phi and phi | lcm");
  Tally orders("order of gcd/lcm is min/max");
  Tally round_trip("product of prime power factors");
  Tally cancel("quotient(phi psi, psi) = phi");
  Tally product("gcd * lcm = phi * psi");
  Tally boundary("|phi| = 1 on the circle");

  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (int t = 0; t < instances; ++t) {
    const auto phi = random::product_from_pool(rng, pool, 0, 8);
    const auto psi = random::product_from_pool(rng, pool, 0, 8);
    const auto chi = random::product_from_pool(rng, pool, 0, 8);
    const std::string label = phi.to_string() + " / " + psi.to_string();

    idempotent.record(gcd(phi, phi) == phi && lcm(phi, phi) == phi, label);
    commutative.record(gcd(phi, psi) == gcd(psi, phi) && lcm(phi, psi) == lcm(psi, phi), label);
    associative.record(gcd(gcd(phi, psi), chi) == gcd(phi, gcd(psi, chi)) &&
                           lcm(lcm(phi, psi), chi) == lcm(phi, lcm(psi, chi)),
                       label);
    bounds.record(divides(gcd(phi, psi), phi) && divides(gcd(phi, psi), psi) && divides(phi, lcm(phi, psi)) &&
                      divides(psi, lcm(phi, psi)),
                  label);
    bool orders_ok = true;
    for (const auto& p : pool) {
      orders_ok = orders_ok && order(gcd(phi, psi), p) == std::min(order(phi, p), order(psi, p)) &&
                  order(lcm(phi, psi), p) == std::max(order(phi, p), order(psi, p));
    }
    orders.record(orders_ok, label);
    round_trip.record(product_of(prime_power_factors(phi)) == phi, label);
    cancel.record(quotient(phi * psi, psi) == phi, label);
    product.record(gcd(phi, psi) * lcm(phi, psi) == phi * psi, label);

    if (t < 100) {
      double worst = 0.0;
      for (int s = 0; s < 100; ++s) worst = std::max(worst, std::abs(std::abs(evaluate(phi, std::polar(1.0, angle(rng)))) - 1.0));
      boundary.record(worst <= 1e-10, label + " deviates by " + std::to_string(worst));
    }
  }
  return {"algebra",
          {idempotent.result(), commutative.result(), associative.result(), bounds.result(), orders.result(),
           round_trip.result(), cancel.result(), product.result(), boundary.result()}};
}

SuiteResult operators(std::uint64_t seed) {
  random::Engine rng(seed);
  Tally projection("projection identity (norm and ratio), 50 draws");
  Tally star("M_z^* phi is star-cyclic, 50 draws");
  Tally quotient_cyclic("M_psi^* f star-cyclic in Q_theta, 30 draws");
  Tally annihilation("annihilation when xi_j | eta_j, 30 draws");

  auto guarded = [](Tally& tally, auto&& run) {
    try {
      const numerics::Verdict v = run();
      tally.record(v.passed, v.detail);
    } catch (const Error& e) {
      tally.record(false, e.what());
    }
  };

  for (int t = 0; t < 50; ++t) {
    const DiscPoint alpha = random::disc_point(rng, 0.9);
    const int m = uniform(rng, 1, 6);
    guarded(projection, [&] { return numerics::verify_projection_identity(alpha, m); });
  }
  for (int t = 0; t < 50; ++t) {
    const auto pool = point_pool(rng, 3, 0.8);
    const auto phi = random::product_from_pool(rng, pool, 1, 5);
    guarded(star, [&] { return numerics::verify_star_cyclic(phi); });
  }
  for (int t = 0; t < 30; ++t) {
    const auto pool = point_pool(rng, 3, 0.8);
    const auto phi = random::product_from_pool(rng, pool, 1, 5);
    const auto psi = random::product_from_pool(rng, pool, 0, 4);
    guarded(quotient_cyclic, [&] { return numerics::verify_quotient_cyclic(phi, psi); });
  }
  for (int t = 0; t < 30; ++t) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto pool = point_pool(rng, 3, 0.8);
    std::vector<BlaschkeProduct> xi;
    std::vector<BlaschkeProduct> eta;
    for (std::size_t i = 0; i < n; ++i) {
      xi.push_back(random::product_from_pool(rng, pool, 1, 2));
      eta.push_back(random::product_from_pool(rng, pool, 0, 2));
    }
    const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    eta[j] = xi[j] * random::product_from_pool(rng, pool, 0, 2);
    guarded(annihilation, [&] { return numerics::verify_annihilation(xi, eta); });
  }
  return {"operators", {projection.result(), star.result(), quotient_cyclic.result(), annihilation.result()}};
}

SuiteResult oracles(std::uint64_t seed, int instances) {
  random::Engine rng(seed);
  Tally local("nakayama = randomized generators = #Pareto-maximal (" + std::to_string(instances) + " modules)");
  for (int t = 0; t < instances; ++t) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 3));
    std::vector<DiscPoint> alpha;
    for (std::size_t i = 0; i < n; ++i) alpha.push_back(random::disc_point(rng, 0.8));
    const auto tuples = random::order_tuples(rng, n, static_cast<std::size_t>(uniform(rng, 1, 4)), 3);
    try {
      const auto module = numerics::assemble_point_module(alpha, tuples);
      const int pareto = static_cast<int>(pareto_maximal(tuples).size());
      const int nakayama = numerics::nakayama_corank(module);
      const auto cert = numerics::randomized_min_generators(module, 20, seed + static_cast<std::uint64_t>(t));
      std::ostringstream os;
      os << "instance " << t << ": pareto " << pareto << ", nakayama " << nakayama << ", randomized "
         << cert.generators;
      local.record(pareto == nakayama && nakayama == cert.generators, os.str());
    } catch (const Error& e) {
      local.record(false, e.what());
    }
  }

  const int families = std::max(1, instances / 2);
  Tally theorem("monotone co-rank = general co-rank (" + std::to_string(families) + " families)");
  for (int t = 0; t < families; ++t) {
    const auto n = static_cast<std::size_t>(uniform(rng, 2, 3));
    const auto a = random::partition(rng, n);
    const auto fam = random::monotone_family(rng, n, uniform(rng, 1, 8), static_cast<std::size_t>(uniform(rng, 1, 3)), 3, a);
    try {
      const int general = corank_general(fam).overall;
      const int monotone = corank_monotone(fam, a).overall;
      theorem.record(general == monotone, "family " + std::to_string(t) + ": general " + std::to_string(general) +
                                              ", monotone " + std::to_string(monotone));
    } catch (const Error& e) {
      theorem.record(false, e.what());
    }
  }
  return {"oracles", {local.result(), theorem.result()}};
}

PaperExamples paper_examples(std::uint64_t seed) {
  PaperExamples out;
  auto assert_that = [&](std::string name, bool ok, std::string detail) {
    out.assertions.push_back({std::move(name), ok, std::move(detail)});
  };

  // Distinct points, one decreasing and one increasing sequence.
  const auto first = fixtures::distinct_points(2, {1}, -3, 3);
  const auto first_general = corank_general(first);
  const auto first_monotone = corank_monotone(first, {1});
  bool i_is_r1 = true;
  for (const auto& t : first_monotone.per_tuple) {
    // r1 is the index of the increasing variable's point.
    const int r1 = first.k_min() + static_cast<int>(t.tuple.index[1]);
    i_is_r1 = i_is_r1 && t.i_set && *t.i_set == std::vector<int>{r1};
  }
  assert_that("distinct points: co-rank = 1 with I = {r1} for every tuple",
              first_general.overall == 1 && first_monotone.overall == 1 && i_is_r1,
              "general " + std::to_string(first_general.overall) + ", monotone " +
                  std::to_string(first_monotone.overall) + ", " + std::to_string(first_monotone.per_tuple.size()) +
                  " tuples");
  out.table.push_back({"distinct points", "general", first_general.overall, 1});
  out.table.push_back({"distinct points", "monotone", first_monotone.overall, 1});
  out.table.push_back({"distinct points", "izuchi_published", izuchi_published_corank(first).overall, 1});

  // The counterexample.
  const auto ce = fixtures::counterexample();
  const auto general = corank_general(ce.family);
  const auto monotone = corank_monotone(ce.family, {1});
  const auto published = izuchi_published_corank(ce.family);
  assert_that("counterexample: general and monotone co-rank = 2", general.overall == 2 && monotone.overall == 2,
              "general " + std::to_string(general.overall) + ", monotone " + std::to_string(monotone.overall));

  const TupleReport* ac = general.find({ce.a, ce.c});
  assert_that("counterexample: #Z~(b_a, b_c) = 2", ac != nullptr && ac->count == 2,
              ac ? "minimal representation " + ac->minimal_rep.to_string() : "tuple (a, c) missing");

  int others = 0;
  for (const auto& t : general.per_tuple) {
    if (&t != ac) others = std::max(others, t.count);
  }
  assert_that("counterexample: #Z~ <= 1 for every other tuple", others <= 1,
              std::to_string(general.per_tuple.size() - 1) + " other tuples, largest count " + std::to_string(others));

  assert_that("counterexample: published formula gives 1", published.overall == 1,
              "published formula " + std::to_string(published.overall));

  const std::vector<OrderTuple> nj{{2, 1}, {1, 1}, {1, 2}, {1, 2}};
  const auto module = numerics::assemble_point_module({ce.a, ce.c}, nj);
  const int nakayama = numerics::nakayama_corank(module);
  const auto cert = numerics::randomized_min_generators(module, 20, seed);
  assert_that("counterexample: numerical co-rank of N_j = 2", nakayama == 2 && cert.generators == 2,
              "nakayama " + std::to_string(nakayama) + ", randomized " + std::to_string(cert.generators) + " (" +
                  std::to_string(cert.successes) + "/" + std::to_string(cert.trials) + " draws)");

  out.table.push_back({"counterexample", "general", general.overall, 2});
  out.table.push_back({"counterexample", "monotone", monotone.overall, 2});
  out.table.push_back({"counterexample", "izuchi_published", published.overall, 1});
  out.table.push_back({"counterexample N_j", "nakayama", nakayama, 2});
  out.table.push_back({"counterexample N_j", "randomized", cert.generators, 2});
  return out;
}

}  // namespace rudin::suites
