#include "rudin/blaschke.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "rudin/error.hpp"

namespace rudin {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::TupleNotInLambda: return "TupleNotInLambda";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::BadVariablePartition: return "BadVariablePartition";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::NotTwoVariables: return "NotTwoVariables";
    case ErrorCode::TruncationTooCoarse: return "TruncationTooCoarse";
    case ErrorCode::SingularResolvent: return "SingularResolvent";
    case ErrorCode::DeskScaleExceeded: return "DeskScaleExceeded";
    case ErrorCode::NotSinglePoint: return "NotSinglePoint";
    case ErrorCode::VectorOutsideModule: return "VectorOutsideModule";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

DiscPoint::DiscPoint(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im) || re * re + im * im >= 1.0) {
    std::ostringstream os;
    os << "point (" << re << ", " << im << ") is not inside the open unit disc";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

bool operator==(const DiscPoint& a, const DiscPoint& b) noexcept {
  return std::bit_cast<std::uint64_t>(a.re_) == std::bit_cast<std::uint64_t>(b.re_) &&
         std::bit_cast<std::uint64_t>(a.im_) == std::bit_cast<std::uint64_t>(b.im_);
}

std::strong_ordering operator<=>(const DiscPoint& a, const DiscPoint& b) noexcept {
  if (auto c = std::bit_cast<std::uint64_t>(a.re_) <=> std::bit_cast<std::uint64_t>(b.re_); c != 0) {
    return c;
  }
  return std::bit_cast<std::uint64_t>(a.im_) <=> std::bit_cast<std::uint64_t>(b.im_);
}

std::string DiscPoint::to_string() const {
  std::ostringstream os;
  os.precision(6);
  os << re_ << (std::signbit(im_) ? "-" : "+") << std::abs(im_) << "i";
  return os.str();
}

bool display_less(const DiscPoint& a, const DiscPoint& b) noexcept {
  const double ra = std::abs(a.value());
  const double rb = std::abs(b.value());
  if (ra != rb) return ra < rb;
  const double ta = std::arg(a.value());
  const double tb = std::arg(b.value());
  if (ta != tb) return ta < tb;
  return a < b;
}

BlaschkeProduct::BlaschkeProduct(ZeroMap zeros) : zeros_(std::move(zeros)) {
  for (const auto& [p, m] : zeros_) {
    if (m < 1) {
      throw Error(ErrorCode::InvalidArgument,
                  "multiplicity of zero " + p.to_string() + " must be >= 1");
    }
  }
}

BlaschkeProduct BlaschkeProduct::factor(const DiscPoint& alpha, int multiplicity) {
  return BlaschkeProduct(ZeroMap{{alpha, multiplicity}});
}

int BlaschkeProduct::degree() const noexcept {
  int d = 0;
  for (const auto& [p, m] : zeros_) d += m;
  return d;
}

std::vector<DiscPoint> BlaschkeProduct::zero_list() const {
  std::vector<DiscPoint> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (const auto& [p, m] : zeros_) out.insert(out.end(), static_cast<std::size_t>(m), p);
  return out;
}

BlaschkeProduct operator*(const BlaschkeProduct& a, const BlaschkeProduct& b) {
  BlaschkeProduct out = a;
  for (const auto& [p, m] : b.zeros_) out.zeros_[p] += m;
  return out;
}

std::string BlaschkeProduct::to_string() const {
  if (zeros_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, m] : zeros_) {
    if (!first) os << " * ";
    first = false;
    os << "b[" << p.to_string() << "]";
    if (m != 1) os << "^" << m;
  }
  return os.str();
}

Complex blaschke_factor(const DiscPoint& alpha, Complex z) noexcept {
  const Complex a = alpha.value();
  return (z - a) / (1.0 - std::conj(a) * z);
}

Complex evaluate(const BlaschkeProduct& phi, Complex z) noexcept {
  Complex v{1.0, 0.0};
  for (const auto& [p, m] : phi.zeros()) {
    const Complex f = blaschke_factor(p, z);
    for (int j = 0; j < m; ++j) v *= f;
  }
  return v;
}

int order(const BlaschkeProduct& phi, const DiscPoint& p) noexcept {
  const auto it = phi.zeros().find(p);
  return it == phi.zeros().end() ? 0 : it->second;
}

bool divides(const BlaschkeProduct& psi, const BlaschkeProduct& phi) noexcept {
  return std::all_of(psi.zeros().begin(), psi.zeros().end(),
                     [&](const auto& z) { return z.second <= order(phi, z.first); });
}

BlaschkeProduct gcd(const BlaschkeProduct& phi, const BlaschkeProduct& psi) {
  BlaschkeProduct::ZeroMap out;
  for (const auto& [p, m] : phi.zeros()) {
    if (const int k = std::min(m, order(psi, p)); k > 0) out.emplace(p, k);
  }
  return BlaschkeProduct(std::move(out));
}

BlaschkeProduct lcm(const BlaschkeProduct& phi, const BlaschkeProduct& psi) {
  BlaschkeProduct::ZeroMap out = phi.zeros();
  for (const auto& [p, m] : psi.zeros()) {
    int& slot = out[p];
    slot = std::max(slot, m);
  }
  return BlaschkeProduct(std::move(out));
}

BlaschkeProduct quotient(const BlaschkeProduct& phi, const BlaschkeProduct& psi) {
  if (!divides(psi, phi)) {
    throw Error(ErrorCode::NotDivisible, psi.to_string() + " does not divide " + phi.to_string());
  }
  BlaschkeProduct::ZeroMap out;
  for (const auto& [p, m] : phi.zeros()) {
    if (const int k = m - order(psi, p); k > 0) out.emplace(p, k);
  }
  return BlaschkeProduct(std::move(out));
}

std::vector<PrimePower> prime_power_factors(const BlaschkeProduct& phi) {
  std::vector<PrimePower> out;
  out.reserve(phi.zeros().size());
  for (const auto& [p, m] : phi.zeros()) out.push_back({p, m});
  return out;
}

BlaschkeProduct product_of(const std::vector<PrimePower>& factors) {
  BlaschkeProduct out;
  for (const auto& f : factors) out = out * BlaschkeProduct::factor(f.base, f.exponent);
  return out;
}

}  // namespace rudin
