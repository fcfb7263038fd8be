#include "rudin/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rudin::random {

namespace {

int uniform_int(Engine& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<DiscPoint> distinct_points(Engine& rng, std::size_t count) {
  std::vector<DiscPoint> out;
  while (out.size() < count) {
    const DiscPoint p = disc_point(rng, 0.85);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

// Nondecreasing sequence of `length` values in [0, max_mult] starting at 0.
std::vector<int> staircase(Engine& rng, std::size_t length, int max_mult) {
  std::vector<int> s(length, 0);
  for (std::size_t c = 1; c < length; ++c) {
    const int step = uniform_int(rng, 0, 3) == 0 ? uniform_int(rng, 1, 2) : 0;
    s[c] = std::min(max_mult, s[c - 1] + step);
  }
  return s;
}

}  // namespace

DiscPoint disc_point(Engine& rng, double max_radius) {
  std::uniform_real_distribution<double> radius(0.0, max_radius);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  const double r = radius(rng);
  const double t = angle(rng);
  return DiscPoint(r * std::cos(t), r * std::sin(t));
}

BlaschkeProduct product_from_pool(Engine& rng, const std::vector<DiscPoint>& pool, int min_degree,
                                  int max_degree) {
  const int degree = uniform_int(rng, min_degree, max_degree);
  BlaschkeProduct out;
  for (int d = 0; d < degree; ++d) {
    out = out * BlaschkeProduct::factor(pool[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(pool.size()) - 1))]);
  }
  return out;
}

std::vector<OrderTuple> order_tuples(Engine& rng, std::size_t n, std::size_t count, int max_entry) {
  std::vector<OrderTuple> out;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<int> l(n);
    for (auto& v : l) v = uniform_int(rng, 1, max_entry);
    out.emplace_back(std::move(l));
  }
  return out;
}

RudinFamily family(Engine& rng, std::size_t n, int width, std::size_t primes_per_variable, int max_mult) {
  std::vector<VariableSpec> vars(n);
  for (auto& v : vars) {
    for (const auto& p : distinct_points(rng, primes_per_variable)) {
      std::vector<int> w(static_cast<std::size_t>(width));
      for (auto& x : w) x = uniform_int(rng, 0, 1) ? uniform_int(rng, 1, max_mult) : 0;
      const int left = uniform_int(rng, 0, 2) == 0 ? uniform_int(rng, 1, max_mult) : 0;
      const int right = uniform_int(rng, 0, 2) == 0 ? uniform_int(rng, 1, max_mult) : 0;
      v.primes.push_back({p, MultiplicityProfile(left, std::move(w), right)});
    }
  }
  return RudinFamily(0, width - 1, std::move(vars));
}

RudinFamily monotone_family(Engine& rng, std::size_t n, int width, std::size_t primes_per_variable,
                            int max_mult, const std::vector<std::size_t>& increasing) {
  std::vector<VariableSpec> vars(n);
  const auto columns = static_cast<std::size_t>(width) + 2;
  for (std::size_t i = 0; i < n; ++i) {
    const bool inc = std::find(increasing.begin(), increasing.end(), i) != increasing.end();
    vars[i].monotone = inc ? Monotonicity::Increasing : Monotonicity::Decreasing;
    for (const auto& p : distinct_points(rng, primes_per_variable)) {
      auto s = staircase(rng, columns, max_mult);
      if (!inc) std::reverse(s.begin(), s.end());
      std::vector<int> w(s.begin() + 1, s.end() - 1);
      vars[i].primes.push_back({p, MultiplicityProfile(s.front(), std::move(w), s.back())});
    }
  }
  return RudinFamily(0, width - 1, std::move(vars));
}

std::vector<std::size_t> partition(Engine& rng, std::size_t n) {
  std::vector<std::size_t> a;
  while (a.empty() || a.size() == n) {
    a.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (uniform_int(rng, 0, 1)) a.push_back(i);
    }
  }
  return a;
}

}  // namespace rudin::random
