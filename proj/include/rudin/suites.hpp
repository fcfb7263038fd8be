#pragma once

// Seeded verification batteries behind `rudin verify` and
// `rudin paper-examples`.

#include <cstdint>
#include <string>
#include <vector>

namespace rudin::suites {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const noexcept;
};

/// Lattice laws, factorization round trips and boundary modulus on random products.
SuiteResult algebra(std::uint64_t seed, int instances = 500);

/// Projection identity, star-cyclicity, quotient cyclicity and annihilation batteries.
SuiteResult operators(std::uint64_t seed);

/// Nakayama co-rank vs randomized generators vs Pareto count on random
/// single-point modules, and monotone vs general co-rank on random families.
SuiteResult oracles(std::uint64_t seed, int instances = 200);

struct PaperRow {
  std::string instance;
  std::string method;
  int value = 0;
  int expected = 0;
};

struct PaperExamples {
  std::vector<Check> assertions;
  std::vector<PaperRow> table;

  bool passed() const noexcept;
};

/// Builds both worked examples and checks every stated value; the seed only
/// drives the numerical generator draws.
PaperExamples paper_examples(std::uint64_t seed);

}  // namespace rudin::suites
