#pragma once

#include <cstddef>
#include <vector>

#include "tranent/interval.hpp"
#include "tranent/rational.hpp"

namespace tranent {

struct Node {
  Rational x;
  Rational y;
  bool operator==(const Node& o) const { return x == o.x && y == o.y; }
};

/// Continuous piecewise-linear map on a compact interval, stored as its
/// graph's vertices. Between consecutive nodes the map is affine; slopes are
/// derived on demand. Continuity holds by construction.
class PLMap {
public:
  /// Requires at least two nodes with strictly increasing x. Collinear nodes
  /// are kept: callers such as window restriction rely on tile breakpoints
  /// staying visible.
  explicit PLMap(std::vector<Node> nodes);

  static PLMap identity(const Interval& domain);

  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t piece_count() const { return nodes_.size() - 1; }
  Interval domain() const { return Interval(nodes_.front().x, nodes_.back().x); }
  Rational slope(std::size_t piece) const;

  /// Drops nodes lying on the segment joining their neighbours.
  PLMap simplified() const;

  bool operator==(const PLMap& o) const { return nodes_ == o.nodes_; }

private:
  std::vector<Node> nodes_;
};

/// Exact value at x. Throws OutOfDomain.
Rational eval(const PLMap& m, const Rational& x);

/// outer ∘ inner. Throws DomainExceeded when inner's range leaves outer's domain.
PLMap compose(const PLMap& outer, const PLMap& inner);

/// Exact [min, max] of m over w. Throws OutOfDomain unless w ⊆ domain.
Interval range_on(const PLMap& m, const Interval& w);
Interval range(const PLMap& m);

/// The sub-map on a window inside the domain.
PLMap restrict(const PLMap& m, const Interval& w);

/// Solution set of m(x) = c inside w, as ordered disjoint components; a
/// component is a point unless m is constant c along a flat piece.
std::vector<Interval> solve_eq(const PLMap& m, const Rational& c, const Interval& w);
std::vector<Interval> solve_eq(const PLMap& m, const Rational& c);

/// Solution set of m(x) = x.
std::vector<Interval> fixed_points(const PLMap& m);

/// Number of maximal monotone runs; flat pieces form their own laps.
std::size_t lap_count(const PLMap& m);

/// Largest absolute slope.
Rational lipschitz_const(const PLMap& m);

/// Pointwise m(x) - x, used for fixed-point censuses.
PLMap minus_identity(const PLMap& m);

/// Leftmost point of w where m attains its max (resp. min) over w.
Rational argmax_on(const PLMap& m, const Interval& w);
Rational argmin_on(const PLMap& m, const Interval& w);

}  // namespace tranent
