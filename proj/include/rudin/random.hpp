#pragma once

// Seeded generators for property tests and the verification suites.

#include <cstdint>
#include <random>
#include <vector>

#include "rudin/blaschke.hpp"
#include "rudin/family.hpp"

namespace rudin::random {

using Engine = std::mt19937_64;

DiscPoint disc_point(Engine& rng, double max_radius);

/// Product of zeros drawn (with repetition) from `pool`, degree in [min_degree, max_degree].
BlaschkeProduct product_from_pool(Engine& rng, const std::vector<DiscPoint>& pool, int min_degree,
                                  int max_degree);

/// n-tuples with entries in [1, max_entry].
std::vector<OrderTuple> order_tuples(Engine& rng, std::size_t n, std::size_t count, int max_entry);

/// Arbitrary profiles, tails included.
RudinFamily family(Engine& rng, std::size_t n, int width, std::size_t primes_per_variable, int max_mult);

/// Monotone family: variables in `increasing` nondecreasing with zero left
/// tail, the others nonincreasing with zero right tail.
RudinFamily monotone_family(Engine& rng, std::size_t n, int width, std::size_t primes_per_variable,
                            int max_mult, const std::vector<std::size_t>& increasing);

/// Random proper nonempty subset of {0..n-1}.
std::vector<std::size_t> partition(Engine& rng, std::size_t n);

}  // namespace rudin::random
