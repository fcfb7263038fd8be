#include "rudin/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rudin::fixtures {

namespace {

DiscPoint spiral_point(std::size_t variable, int j, int k_min, int k_max) {
  const double span = std::max(1, k_max - k_min);
  const double r = 0.15 + 0.6 * static_cast<double>(j - k_min) / span;
  const double theta = 2.0 * std::numbers::pi * (static_cast<double>(variable) + 0.37) / 5.0 +
                       0.21 * static_cast<double>(j - k_min);
  return DiscPoint(r * std::cos(theta), r * std::sin(theta));
}

std::vector<int> indicator(int k_min, int k_max, auto pred) {
  std::vector<int> w;
  for (int m = k_min; m <= k_max; ++m) w.push_back(pred(m) ? 1 : 0);
  return w;
}

}  // namespace

Counterexample counterexample(int k) {
  const int k_min = k - 1;
  const int k_max = k + 4;

  VariableSpec phi{Monotonicity::Decreasing, {}};
  VariableSpec psi{Monotonicity::Increasing, {}};

  const DiscPoint a(0.5, 0.0);
  const DiscPoint c(0.0, 0.5);

  // ord(phi_m, a) = #{j in {k, k+3} : j >= m}
  std::vector<int> wa;
  for (int m = k_min; m <= k_max; ++m) wa.push_back((m <= k ? 1 : 0) + (m <= k + 3 ? 1 : 0));
  phi.primes.push_back({a, MultiplicityProfile(2, wa, 0)});
  for (int j : {k - 1, k + 1, k + 2, k + 4}) {
    const DiscPoint p(0.3 * std::cos(0.4 * (j - k) + 1.0), 0.3 * std::sin(0.4 * (j - k) + 1.0));
    phi.primes.push_back({p, MultiplicityProfile(1, indicator(k_min, k_max, [j](int m) { return m <= j; }), 0)});
  }

  // ord(psi_m, c) = #{j in {k, k+2} : j <= m}
  std::vector<int> wc;
  for (int m = k_min; m <= k_max; ++m) wc.push_back((m >= k ? 1 : 0) + (m >= k + 2 ? 1 : 0));
  psi.primes.push_back({c, MultiplicityProfile(0, wc, 2)});
  for (int j : {k - 1, k + 1, k + 3, k + 4}) {
    const DiscPoint p(-0.4 * std::cos(0.3 * (j - k)), -0.4 * std::sin(0.3 * (j - k) + 0.5));
    psi.primes.push_back({p, MultiplicityProfile(0, indicator(k_min, k_max, [j](int m) { return m >= j; }), 1)});
  }

  return {RudinFamily(k_min, k_max, {std::move(phi), std::move(psi)}), a, c};
}

RudinFamily distinct_points(std::size_t n, const std::vector<std::size_t>& increasing, int k_min,
                            int k_max) {
  std::vector<VariableSpec> vars(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool inc = std::find(increasing.begin(), increasing.end(), i) != increasing.end();
    vars[i].monotone = inc ? Monotonicity::Increasing : Monotonicity::Decreasing;
    for (int j = k_min; j <= k_max; ++j) {
      auto w = inc ? indicator(k_min, k_max, [j](int m) { return m >= j; })
                   : indicator(k_min, k_max, [j](int m) { return m <= j; });
      vars[i].primes.push_back(
          {spiral_point(i, j, k_min, k_max), MultiplicityProfile(inc ? 0 : 1, std::move(w), inc ? 1 : 0)});
    }
  }
  return RudinFamily(k_min, k_max, std::move(vars));
}

RudinFamily growing_window(int w) {
  VariableSpec first;
  VariableSpec second;
  for (int m = 1; m <= w; ++m) {
    std::vector<int> up;
    std::vector<int> down;
    for (int k = -w; k <= w; ++k) {
      const bool inside = std::abs(k) <= m;
      up.push_back(inside ? m + 1 + k : 0);
      down.push_back(inside ? m + 1 - k : 0);
    }
    const double r = 0.1 + 0.8 * (1.0 - 1.0 / (m + 1));
    first.primes.push_back({DiscPoint(r, 0.0), MultiplicityProfile(0, std::move(up), 0)});
    second.primes.push_back({DiscPoint(0.0, r), MultiplicityProfile(0, std::move(down), 0)});
  }
  return RudinFamily(-w, w, {std::move(first), std::move(second)}, true);
}

RudinFamily empty_overlap() {
  VariableSpec first{Monotonicity::Decreasing, {{DiscPoint(0.25, 0.0), MultiplicityProfile(1, {1, 0, 0}, 0)}}};
  VariableSpec second{Monotonicity::Increasing, {{DiscPoint(0.0, 0.25), MultiplicityProfile(0, {0, 0, 1}, 1)}}};
  return RudinFamily(0, 2, {std::move(first), std::move(second)});
}

}  // namespace rudin::fixtures
