#pragma once

#include <random>
#include <string>
#include <vector>

#include "tranent/interval.hpp"
#include "tranent/plmap.hpp"
#include "tranent/rational.hpp"

namespace testing_support {

using tranent::Interval;
using tranent::Node;
using tranent::PLMap;
using tranent::Rational;

inline Rational Q(const std::string& s) { return tranent::parse_rational(s); }

inline Interval I(const std::string& lo, const std::string& hi) { return Interval(Q(lo), Q(hi)); }

inline PLMap pl(std::initializer_list<std::pair<const char*, const char*>> pts) {
  std::vector<Node> nodes;
  for (const auto& [x, y] : pts) nodes.push_back({Q(x), Q(y)});
  return PLMap(std::move(nodes));
}

inline PLMap tent() { return pl({{"0", "0"}, {"1/2", "1"}, {"1", "0"}}); }
inline PLMap tent3() { return pl({{"0", "0"}, {"1/3", "1"}, {"2/3", "0"}, {"1", "1"}}); }
inline PLMap toy() { return pl({{"0", "0"}, {"1/2", "3/4"}, {"1", "1"}, {"3/2", "3"}, {"2", "0"}}); }

/// Deterministic rational sampler for property checks.
class Sampler {
public:
  explicit Sampler(unsigned seed = 20240607u) : rng_(seed) {}

  /// Uniform-ish rational in [lo, hi] with denominator up to max_den.
  Rational in(const Interval& w, long max_den = 997) {
    std::uniform_int_distribution<long> den(1, max_den);
    const long d = den(rng_);
    std::uniform_int_distribution<long> num(0, d);
    Rational t(num(rng_), d);
    t.canonicalize();
    return w.lo + (w.hi - w.lo) * t;
  }

  /// Random PLMap on [lo, hi] with `pieces` pieces and values in [-2, 2].
  PLMap plmap(const Interval& w, int pieces) {
    std::vector<Rational> xs{w.lo, w.hi};
    while (static_cast<int>(xs.size()) < pieces + 1) {
      Rational x = in(w);
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    std::vector<Node> nodes;
    for (const auto& x : xs) nodes.push_back({x, in(Interval(-2, 2), 64)});
    return PLMap(std::move(nodes));
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
  std::mt19937_64 rng_;
};

}  // namespace testing_support
