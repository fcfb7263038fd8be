#pragma once

// Rudin families: n sequences {phi_{i,k}}_{k in Z} of finite Blaschke
// products, stored per variable as a list of primes, each with an eventually
// constant multiplicity profile k -> ord(phi_{i,k}, prime).

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "rudin/blaschke.hpp"

namespace rudin {

/// Values of k -> ord(phi_{i,k}, p) for one variable i and one prime p.
///
/// profile(k) = left_tail for k < k_min, window[k - k_min] on the window and
/// right_tail for k > k_max.
class MultiplicityProfile {
 public:
  MultiplicityProfile(int left_tail, std::vector<int> window, int right_tail);

  int left_tail() const noexcept { return left_tail_; }
  int right_tail() const noexcept { return right_tail_; }
  const std::vector<int>& window() const noexcept { return window_; }

  /// Value at k for a window starting at k_min.
  int at(int k, int k_min) const noexcept;

  friend bool operator==(const MultiplicityProfile&, const MultiplicityProfile&) = default;

 private:
  int left_tail_;
  std::vector<int> window_;
  int right_tail_;
};

enum class Monotonicity { None, Increasing, Decreasing };

std::string_view to_string(Monotonicity m) noexcept;

struct PrimeEntry {
  DiscPoint prime;
  MultiplicityProfile profile;

  friend bool operator==(const PrimeEntry&, const PrimeEntry&) = default;
};

struct VariableSpec {
  /// Declared shape; only consulted by callers choosing a monotone partition.
  Monotonicity monotone = Monotonicity::None;
  std::vector<PrimeEntry> primes;

  friend bool operator==(const VariableSpec&, const VariableSpec&) = default;
};

class RudinFamily {
 public:
  /// Throws Error(InvalidArgument) on an empty variable list, k_min > k_max,
  /// a window of the wrong length or a repeated prime within a variable.
  RudinFamily(int k_min, int k_max, std::vector<VariableSpec> variables, bool truncated = false);

  std::size_t n() const noexcept { return variables_.size(); }
  int k_min() const noexcept { return k_min_; }
  int k_max() const noexcept { return k_max_; }
  const std::vector<VariableSpec>& variables() const noexcept { return variables_; }
  const VariableSpec& variable(std::size_t i) const { return variables_.at(i); }

  /// Set when the family is a finite window of a family that does not fit
  /// the eventually constant encoding; reports carry the flag through.
  bool truncated() const noexcept { return truncated_; }

  /// ord(phi_{i,k}, prime #p of variable i), any k in Z.
  int order_at(std::size_t i, std::size_t p, int k) const;

  /// phi_{i,k} reconstructed from the profiles, any k in Z.
  BlaschkeProduct phi(std::size_t i, int k) const;

  /// Indices k_min-1 .. k_max+1; the two ends stand for the whole tails.
  int first_column() const noexcept { return k_min_ - 1; }
  int last_column() const noexcept { return k_max_ + 1; }

  friend bool operator==(const RudinFamily&, const RudinFamily&) = default;

 private:
  int k_min_;
  int k_max_;
  std::vector<VariableSpec> variables_;
  bool truncated_;
};

/// One representative (alpha_1, ..., alpha_n) of a class in [Lambda].
struct PrimeTuple {
  std::vector<std::size_t> index;  // position of alpha_i in variable i's prime list
  std::vector<DiscPoint> primes;

  friend bool operator==(const PrimeTuple& a, const PrimeTuple& b) { return a.primes == b.primes; }
  std::string to_string() const;
};

bool display_less(const PrimeTuple& a, const PrimeTuple& b) noexcept;

/// Exponent tuple (l_1, ..., l_n).
class OrderTuple {
 public:
  OrderTuple() = default;
  explicit OrderTuple(std::vector<int> l) : l_(std::move(l)) {}
  OrderTuple(std::initializer_list<int> l) : l_(l) {}

  std::size_t size() const noexcept { return l_.size(); }
  int operator[](std::size_t i) const { return l_[i]; }
  const std::vector<int>& values() const noexcept { return l_; }

  /// Componentwise <=.
  bool dominated_by(const OrderTuple& other) const noexcept;

  friend auto operator<=>(const OrderTuple&, const OrderTuple&) = default;
  std::string to_string() const;

 private:
  std::vector<int> l_;
};

/// Z(alpha) = {k : alpha_i | phi_{i,k} for all i}; the tails are summarized
/// by the two unbounded flags and `indices` lists the window part.
struct ZeroSet {
  bool left_unbounded = false;
  std::vector<int> indices;
  bool right_unbounded = false;

  bool empty() const noexcept { return !left_unbounded && !right_unbounded && indices.empty(); }
  friend bool operator==(const ZeroSet&, const ZeroSet&) = default;
  std::string to_string() const;
};

/// All prime tuples occurring jointly at some k, tails included.
std::vector<PrimeTuple> lambda_classes(const RudinFamily& fam);

/// Throws Error(TupleNotInLambda) when the tuple does not name primes of the
/// family or never occurs jointly.
ZeroSet zero_set(const RudinFamily& fam, const PrimeTuple& t);

/// (l_{1,k}, ..., l_{n,k}) for each k of the zero set, in increasing k, with
/// one entry per unbounded tail.
std::vector<OrderTuple> order_tuples(const RudinFamily& fam, const PrimeTuple& t);

/// Looks up the tuple by points. Throws Error(TupleNotInLambda) if a point
/// is not a prime of the corresponding variable.
PrimeTuple make_prime_tuple(const RudinFamily& fam, const std::vector<DiscPoint>& points);

}  // namespace rudin
