// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "rudin/corank.hpp"
#include "rudin/fixtures.hpp"
#include "rudin/numerics/tensor_module.hpp"
#include "rudin/pareto.hpp"
#include "rudin/random.hpp"
#include "rudin/suites.hpp"

using namespace rudin;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.ok && in_time;
  failures += pass ? 0 : 1;
  std::printf("criterion %d %s: %s (%s; %.3f s, limit %.0f s)\n", id, title, pass ? "PASS" : "FAIL", o.detail.c_str(),
              secs, limit_s);
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "counterexample co-rank", 1.0, [] {
    const auto ce = fixtures::counterexample();
    const auto general = corank_general(ce.family);
    const auto monotone = corank_monotone(ce.family, {1});
    const auto* ac = general.find({ce.a, ce.c});
    int others = 0;
    for (const auto& t : general.per_tuple) {
      if (&t != ac) others = std::max(others, t.count);
    }
    const auto worked = suites::paper_examples(0);
    const bool ok = general.overall == 2 && monotone.overall == 2 && ac && ac->count == 2 && others <= 1 &&
                    worked.passed();
    return Outcome{ok, "general " + std::to_string(general.overall) + ", monotone " +
                           std::to_string(monotone.overall) + ", #Z~(a,c) " + std::to_string(ac ? ac->count : -1) +
                           ", max other " + std::to_string(others) +
                           (worked.passed() ? ", worked examples all pass" : ", worked examples FAILED")};
  });

  criterion(2, "published formula undercounts", 1.0, [] {
    const int v = izuchi_published_corank(fixtures::counterexample().family).overall;
    return Outcome{v == 1, "published formula " + std::to_string(v) + ", expected 1"};
  });

  criterion(3, "distinct-points example", 1.0, [] {
    const auto fam = fixtures::distinct_points(2, {1}, -3, 3);
    const auto r = corank_monotone(fam, {1});
    bool i_ok = true;
    for (const auto& t : r.per_tuple) {
      const int r1 = fam.k_min() + static_cast<int>(t.tuple.index[1]);
      i_ok = i_ok && t.i_set && *t.i_set == std::vector<int>{r1} && t.count == 1;
    }
    const int g = corank_general(fam).overall;
    return Outcome{r.overall == 1 && g == 1 && i_ok && !r.per_tuple.empty(),
                   "monotone " + std::to_string(r.overall) + ", general " + std::to_string(g) + ", " +
                       std::to_string(r.per_tuple.size()) + " tuples" + (i_ok ? ", I = {r1} for all" : ", I mismatch")};
  });

  criterion(4, "single-point cross-oracle", 60.0, [] {
    random::Engine rng(0);
    std::uniform_int_distribution<int> n_dist(2, 3), a_dist(1, 4);
    int mismatches = 0;
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = static_cast<std::size_t>(n_dist(rng));
      const auto tuples = random::order_tuples(rng, n, static_cast<std::size_t>(a_dist(rng)), 3);
      std::vector<DiscPoint> alpha;
      for (std::size_t i = 0; i < n; ++i) alpha.push_back(random::disc_point(rng, 0.8));
      const auto m = numerics::assemble_point_module(alpha, tuples);
      const int nak = numerics::nakayama_corank(m);
      const int gen = numerics::randomized_min_generators(m, 20, static_cast<std::uint64_t>(t)).generators;
      const int par = static_cast<int>(pareto_maximal(tuples).size());
      mismatches += (nak == par && gen == par) ? 0 : 1;
    }
    return Outcome{mismatches == 0, "200 instances, " + std::to_string(mismatches) + " mismatches"};
  });

  criterion(5, "monotone vs general co-rank", 10.0, [] {
    random::Engine rng(0);
    std::uniform_int_distribution<int> n_dist(2, 3), w_dist(1, 8), p_dist(1, 3);
    int mismatches = 0;
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = static_cast<std::size_t>(n_dist(rng));
      const auto inc = random::partition(rng, n);
      const auto fam =
          random::monotone_family(rng, n, w_dist(rng), static_cast<std::size_t>(p_dist(rng)), 3, inc);
      mismatches += corank_monotone(fam, inc).overall == corank_general(fam).overall ? 0 : 1;
    }
    return Outcome{mismatches == 0, "100 families, " + std::to_string(mismatches) + " mismatches"};
  });

  criterion(6, "operator identities", 120.0, [] {
    const auto r = suites::operators(0);
    std::string detail;
    for (const auto& c : r.checks) detail += (detail.empty() ? "" : "; ") + c.detail;
    return Outcome{r.passed(), detail};
  });

  criterion(7, "algebra laws", 5.0, [] {
    const auto r = suites::algebra(0, 500);
    int failed = 0;
    for (const auto& c : r.checks) failed += c.passed ? 0 : 1;
    return Outcome{r.passed(), std::to_string(r.checks.size()) + " laws on 500 products, " +
                                   std::to_string(failed) + " failing"};
  });

  criterion(8, "growing-window truncations", 60.0, [] {
    std::string values;
    bool ok = true;
    int prev = -1;
    for (int w = 1; w <= 5; ++w) {
      const auto r = corank_general(fixtures::growing_window(w));
      ok = ok && r.overall >= prev && r.truncated_window;
      prev = r.overall;
      values += (w > 1 ? ", " : "") + std::to_string(r.overall);
    }
    return Outcome{ok, "co-rank for W = 1..5: " + values + " (nondecreasing, flagged truncated)"};
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
