#pragma once

// Finite Blaschke products as zero multisets.
//
// A product is normalized to leading unimodular constant 1, so two products
// are equal exactly when their zero multisets are equal. Zeros are compared
// by the bit pattern of their coordinates: close but distinct points are
// distinct primes.

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rudin {

using Complex = std::complex<double>;

/// A point of the open unit disc.
class DiscPoint {
 public:
  /// Throws Error(InvalidArgument) unless re^2 + im^2 < 1 and both are finite.
  DiscPoint(double re, double im);
  explicit DiscPoint(Complex z) : DiscPoint(z.real(), z.imag()) {}

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }
  Complex value() const noexcept { return {re_, im_}; }

  /// Bitwise coordinate equality.
  friend bool operator==(const DiscPoint& a, const DiscPoint& b) noexcept;
  /// Total order on the coordinate bit patterns; only meant for container keys.
  friend std::strong_ordering operator<=>(const DiscPoint& a, const DiscPoint& b) noexcept;

  std::string to_string() const;

 private:
  double re_;
  double im_;
};

/// Display order: (|a|, arg a) with the bit order as tie break.
bool display_less(const DiscPoint& a, const DiscPoint& b) noexcept;

/// b_p^exponent, one element of the relatively prime factorization.
struct PrimePower {
  DiscPoint base;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class BlaschkeProduct {
 public:
  using ZeroMap = std::map<DiscPoint, int>;

  /// The constant function 1.
  BlaschkeProduct() = default;
  /// Throws Error(InvalidArgument) on a multiplicity < 1.
  explicit BlaschkeProduct(ZeroMap zeros);
  BlaschkeProduct(std::initializer_list<std::pair<const DiscPoint, int>> zeros)
      : BlaschkeProduct(ZeroMap(zeros)) {}

  static BlaschkeProduct unit() { return {}; }
  static BlaschkeProduct factor(const DiscPoint& alpha, int multiplicity = 1);

  const ZeroMap& zeros() const noexcept { return zeros_; }
  int degree() const noexcept;
  bool is_unit() const noexcept { return zeros_.empty(); }

  /// Zeros listed with repetition, in key order.
  std::vector<DiscPoint> zero_list() const;

  friend BlaschkeProduct operator*(const BlaschkeProduct& a, const BlaschkeProduct& b);
  friend bool operator==(const BlaschkeProduct&, const BlaschkeProduct&) = default;

  std::string to_string() const;

 private:
  ZeroMap zeros_;
};

/// Single factor (z - alpha) / (1 - conj(alpha) z).
Complex blaschke_factor(const DiscPoint& alpha, Complex z) noexcept;

Complex evaluate(const BlaschkeProduct& phi, Complex z) noexcept;

/// Multiplicity of p as a zero of phi, 0 when absent.
int order(const BlaschkeProduct& phi, const DiscPoint& p) noexcept;

bool divides(const BlaschkeProduct& psi, const BlaschkeProduct& phi) noexcept;

BlaschkeProduct gcd(const BlaschkeProduct& phi, const BlaschkeProduct& psi);
BlaschkeProduct lcm(const BlaschkeProduct& phi, const BlaschkeProduct& psi);

/// phi / psi. Throws Error(NotDivisible) unless psi divides phi.
BlaschkeProduct quotient(const BlaschkeProduct& phi, const BlaschkeProduct& psi);

/// The set I_phi of maximal prime powers, empty for the unit.
std::vector<PrimePower> prime_power_factors(const BlaschkeProduct& phi);

BlaschkeProduct product_of(const std::vector<PrimePower>& factors);

}  // namespace rudin
