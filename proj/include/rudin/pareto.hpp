#pragma once

#include <span>
#include <vector>

#include "rudin/family.hpp"

namespace rudin {

/// The minimal representation: an antichain of order tuples under
/// componentwise <=, sorted in decreasing lexicographic order.
struct MinimalRep {
  std::vector<OrderTuple> tuples;

  std::size_t size() const noexcept { return tuples.size(); }
  friend bool operator==(const MinimalRep&, const MinimalRep&) = default;
  std::string to_string() const;
};

/// Keeps the tuples not dominated by another tuple of `s`; duplicates
/// collapse first. Throws Error(EmptyInput) on an empty set and
/// Error(InvalidArgument) on mixed tuple lengths.
MinimalRep pareto_maximal(std::span<const OrderTuple> s);

/// Every pair differs by l_i < l_i' and l_j > l_j' for some i != j.
bool is_antichain(std::span<const OrderTuple> s);

}  // namespace rudin
