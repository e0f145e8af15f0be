#pragma once

#include <string>
#include <vector>

#include "tranent/rational.hpp"

namespace tranent {

/// Closed interval [lo, hi] with exact endpoints; lo == hi is a point.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational l, Rational h);
  static Interval point(const Rational& x) { return Interval(x, x); }

  bool is_point() const { return lo == hi; }
  Rational length() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const Interval& o) const { return !(o.hi < lo || hi < o.lo); }
  /// True when the interiors overlap (sharing a single endpoint does not count).
  bool interiors_overlap(const Interval& o) const { return max(lo, o.lo) < min(hi, o.hi); }

  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
  bool operator!=(const Interval& o) const { return !(*this == o); }
};

Interval hull(const Interval& a, const Interval& b);
/// Intersection; caller checks intersects() first.
Interval intersect(const Interval& a, const Interval& b);

/// Parses "lo:hi" with rational endpoints.
Interval parse_interval(const std::string& text);
std::string to_string(const Interval& i);

/// Finite union of closed intervals kept sorted with touching members merged.
using IntervalUnion = std::vector<Interval>;

IntervalUnion normalize(IntervalUnion parts);
Rational measure(const IntervalUnion& u);
/// Every point of `inner` lies in `outer` (both normalized).
bool covers(const IntervalUnion& outer, const IntervalUnion& inner);
bool covers(const IntervalUnion& outer, const Interval& inner);

}  // namespace tranent
