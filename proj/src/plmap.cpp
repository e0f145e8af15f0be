#include "tranent/plmap.hpp"

#include <algorithm>

#include "tranent/error.hpp"

namespace tranent {

namespace {

int sign(const Rational& q) { return sgn(q); }

// Value of the affine segment (x0,y0)-(x1,y1) at x.
Rational lerp(const Node& a, const Node& b, const Rational& x) {
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

void require_within(const PLMap& m, const Interval& w, const char* op) {
  if (!m.domain().contains(w)) {
    throw Error(ErrorCode::OutOfDomain, std::string(op) + ": window " + to_string(w) +
                                            " outside domain " + to_string(m.domain()));
  }
}

}  // namespace

PLMap::PLMap(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw Error(ErrorCode::InvalidArgument, "PLMap needs at least two nodes");
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!(nodes_[i - 1].x < nodes_[i].x)) {
      throw Error(ErrorCode::InvalidArgument,
                  "PLMap node x-coordinates must increase strictly (at " + to_string(nodes_[i].x) + ")");
    }
  }
}

PLMap PLMap::identity(const Interval& domain) {
  return PLMap({{domain.lo, domain.lo}, {domain.hi, domain.hi}});
}

Rational PLMap::slope(std::size_t piece) const {
  const auto& a = nodes_[piece];
  const auto& b = nodes_[piece + 1];
  return (b.y - a.y) / (b.x - a.x);
}

PLMap PLMap::simplified() const {
  std::vector<Node> out;
  out.reserve(nodes_.size());
  out.push_back(nodes_.front());
  for (std::size_t i = 1; i + 1 < nodes_.size(); ++i) {
    const Node& prev = out.back();
    const Node& cur = nodes_[i];
    const Node& next = nodes_[i + 1];
    const bool collinear = (cur.y - prev.y) * (next.x - prev.x) == (next.y - prev.y) * (cur.x - prev.x);
    if (!collinear) out.push_back(cur);
  }
  out.push_back(nodes_.back());
  return PLMap(std::move(out));
}

Rational eval(const PLMap& m, const Rational& x) {
  const auto& n = m.nodes();
  if (x < n.front().x || x > n.back().x) {
    throw Error(ErrorCode::OutOfDomain, "eval at " + to_string(x) + " outside " + to_string(m.domain()));
  }
  auto it = std::lower_bound(n.begin(), n.end(), x, [](const Node& node, const Rational& v) { return node.x < v; });
  if (it->x == x) return it->y;
  return lerp(*(it - 1), *it, x);
}

PLMap restrict(const PLMap& m, const Interval& w) {
  require_within(m, w, "restrict");
  if (w.is_point()) throw Error(ErrorCode::InvalidArgument, "cannot restrict to a single point");
  std::vector<Node> out;
  out.push_back({w.lo, eval(m, w.lo)});
  for (const auto& node : m.nodes()) {
    if (w.lo < node.x && node.x < w.hi) out.push_back(node);
  }
  out.push_back({w.hi, eval(m, w.hi)});
  return PLMap(std::move(out));
}

Interval range_on(const PLMap& m, const Interval& w) {
  require_within(m, w, "range_on");
  Rational lo = eval(m, w.lo);
  Rational hi = lo;
  auto take = [&](const Rational& y) {
    if (y < lo) lo = y;
    if (y > hi) hi = y;
  };
  take(eval(m, w.hi));
  for (const auto& node : m.nodes()) {
    if (w.lo < node.x && node.x < w.hi) take(node.y);
  }
  return Interval(lo, hi);
}

Interval range(const PLMap& m) { return range_on(m, m.domain()); }

PLMap compose(const PLMap& outer, const PLMap& inner) {
  const Interval r = range(inner);
  if (!outer.domain().contains(r)) {
    throw Error(ErrorCode::DomainExceeded,
                "inner range " + to_string(r) + " not inside outer domain " + to_string(outer.domain()));
  }
  const auto& on = outer.nodes();
  const auto& in = inner.nodes();
  // (x, inner(x)) samples: inner nodes plus inner-preimages of outer nodes.
  std::vector<Node> samples;
  samples.reserve(in.size() * 2);
  for (std::size_t i = 0; i + 1 < in.size(); ++i) {
    const Node& a = in[i];
    const Node& b = in[i + 1];
    samples.push_back(a);
    if (a.y == b.y) continue;
    const bool up = a.y < b.y;
    const Rational& lo = up ? a.y : b.y;
    const Rational& hi = up ? b.y : a.y;
    auto first = std::upper_bound(on.begin(), on.end(), lo, [](const Rational& v, const Node& n) { return v < n.x; });
    auto last = std::lower_bound(on.begin(), on.end(), hi, [](const Node& n, const Rational& v) { return n.x < v; });
    std::vector<Node> crossings;
    for (auto it = first; it < last; ++it) {
      crossings.push_back({a.x + (it->x - a.y) * (b.x - a.x) / (b.y - a.y), it->x});
    }
    if (!up) std::reverse(crossings.begin(), crossings.end());
    samples.insert(samples.end(), crossings.begin(), crossings.end());
  }
  samples.push_back(in.back());
  std::vector<Node> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back({s.x, eval(outer, s.y)});
  return PLMap(std::move(out)).simplified();
}

std::vector<Interval> solve_eq(const PLMap& m, const Rational& c, const Interval& w) {
  require_within(m, w, "solve_eq");
  const auto& n = m.nodes();
  IntervalUnion found;
  for (std::size_t i = 0; i + 1 < n.size(); ++i) {
    if (n[i + 1].x < w.lo || n[i].x > w.hi) continue;
    const Rational a = max(n[i].x, w.lo);
    const Rational b = min(n[i + 1].x, w.hi);
    const Rational ya = lerp(n[i], n[i + 1], a);
    const Rational yb = lerp(n[i], n[i + 1], b);
    if (ya == yb) {
      if (ya == c) found.emplace_back(a, b);
      continue;
    }
    if (sign(ya - c) * sign(yb - c) <= 0) {
      found.push_back(Interval::point(a + (c - ya) * (b - a) / (yb - ya)));
    }
  }
  return normalize(std::move(found));
}

std::vector<Interval> solve_eq(const PLMap& m, const Rational& c) { return solve_eq(m, c, m.domain()); }

PLMap minus_identity(const PLMap& m) {
  std::vector<Node> out;
  out.reserve(m.nodes().size());
  for (const auto& node : m.nodes()) out.push_back({node.x, node.y - node.x});
  return PLMap(std::move(out));
}

std::vector<Interval> fixed_points(const PLMap& m) { return solve_eq(minus_identity(m), 0); }

std::size_t lap_count(const PLMap& m) {
  std::size_t laps = 1;
  int prev = sign(m.slope(0));
  for (std::size_t i = 1; i < m.piece_count(); ++i) {
    const int s = sign(m.slope(i));
    if (s != prev) ++laps;
    prev = s;
  }
  return laps;
}

Rational lipschitz_const(const PLMap& m) {
  Rational best = 0;
  for (std::size_t i = 0; i < m.piece_count(); ++i) best = max(best, abs(m.slope(i)));
  return best;
}

Rational argmax_on(const PLMap& m, const Interval& w) {
  return solve_eq(m, range_on(m, w).hi, w).front().lo;
}

Rational argmin_on(const PLMap& m, const Interval& w) {
  return solve_eq(m, range_on(m, w).lo, w).front().lo;
}

}  // namespace tranent
