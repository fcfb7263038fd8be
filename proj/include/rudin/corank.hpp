#pragma once

// Co-rank of Rudin quotient modules Q_Phi = V_k Q_{phi_{1,k}} (x) ... (x) Q_{phi_{n,k}}.
//
// corank_general takes the supremum over prime tuples of the size of the
// Pareto-maximal set of order tuples. corank_monotone counts the same
// quantity for increasing/decreasing families through successive quotients
// of the sequences. izuchi_published_corank evaluates an earlier published
// two-variable formula that is known to be wrong; it is kept to reproduce
// the counterexample.

#include <optional>
#include <string>
#include <vector>

#include "rudin/family.hpp"
#include "rudin/pareto.hpp"

namespace rudin {

enum class CorankMethod { General, Monotone, IzuchiPublished };

std::string_view to_string(CorankMethod m) noexcept;

struct TupleReport {
  PrimeTuple tuple;
  ZeroSet zero_set;
  MinimalRep minimal_rep;  // empty for the published formula
  int count = 0;
  std::optional<std::vector<int>> i_set;  // monotone method only
};

struct CorankReport {
  CorankMethod method = CorankMethod::General;
  int overall = 0;
  std::vector<TupleReport> per_tuple;  // sorted by display order of the tuples
  bool truncated_window = false;

  const TupleReport* find(const std::vector<DiscPoint>& primes) const;
};

struct MonotoneCheck {
  bool ok = true;
  std::vector<std::string> diagnostics;

  explicit operator bool() const noexcept { return ok; }
};

CorankReport corank_general(const RudinFamily& fam);

/// `increasing` lists the 0-based variables of A; the rest form B.
/// Throws Error(BadVariablePartition) unless A is a proper nonempty subset.
MonotoneCheck validate_monotone(const RudinFamily& fam, const std::vector<std::size_t>& increasing);

/// Throws Error(NotMonotone) when validate_monotone fails.
CorankReport corank_monotone(const RudinFamily& fam, const std::vector<std::size_t>& increasing);

/// Two variables, the first decreasing and the second increasing.
/// Throws Error(NotTwoVariables) or Error(NotMonotone).
CorankReport izuchi_published_corank(const RudinFamily& fam);

/// Variables declared increasing in the family, as used by the CLI.
std::vector<std::size_t> declared_increasing(const RudinFamily& fam);

}  // namespace rudin
