#include "tranent/dynamics.hpp"

#include <algorithm>

#include "tranent/error.hpp"

namespace tranent {

std::optional<Interval> Domain::clip(const Interval& w) const {
  Rational l = lo ? max(*lo, w.lo) : w.lo;
  Rational h = hi ? min(*hi, w.hi) : w.hi;
  if (h < l) return std::nullopt;
  return Interval(l, h);
}

std::vector<Interval> Dynamics::fixed_points(const Interval& w) const {
  if (w.is_point()) {
    if (eval(w.lo) == w.lo) return {w};
    return {};
  }
  return tranent::fixed_points(restrict(w));
}

std::vector<Interval> Dynamics::solve(const Rational& c, const Interval& w) const {
  if (w.is_point()) {
    if (eval(w.lo) == c) return {w};
    return {};
  }
  return solve_eq(restrict(w), c);
}

Rational Dynamics::eval_n(Rational x, int n) const {
  for (int i = 0; i < n; ++i) x = eval(x);
  return x;
}

Interval Dynamics::image_n(Interval k, int n) const {
  for (int i = 0; i < n; ++i) k = image(k);
  return k;
}

PLMap restrict_iterate(const Dynamics& f, const Interval& w, int n) {
  PLMap g = f.restrict(w);
  for (int i = 1; i < n; ++i) {
    const Interval img = range(g);
    if (img.is_point()) {
      const Rational v = f.eval_n(img.lo, n - i);
      std::vector<Node> flat;
      for (const auto& node : g.nodes()) flat.push_back({node.x, v});
      return PLMap(std::move(flat)).simplified();
    }
    g = compose(f.restrict(img), g);
  }
  return g;
}

std::vector<PLMap> split_inside(const PLMap& m, const Domain& d) {
  std::vector<Rational> cuts;
  for (const auto& n : m.nodes()) cuts.push_back(n.x);
  for (const auto* bound : {&d.lo, &d.hi}) {
    if (!*bound) continue;
    for (const auto& s : solve_eq(m, **bound)) {
      cuts.push_back(s.lo);
      cuts.push_back(s.hi);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<PLMap> out;
  std::optional<Rational> start;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const bool inside = d.contains(eval(m, (cuts[i] + cuts[i + 1]) / 2));
    if (inside && !start) start = cuts[i];
    if (!inside && start) {
      out.push_back(restrict(m, Interval(*start, cuts[i])));
      start.reset();
    }
  }
  if (start) out.push_back(restrict(m, Interval(*start, cuts.back())));
  return out;
}

std::vector<PLMap> partial_iterate(const Dynamics& f, const Interval& w, int n) {
  std::vector<PLMap> cur{f.restrict(w)};
  const Domain d = f.domain();
  for (int i = 1; i < n; ++i) {
    std::vector<PLMap> next;
    for (const auto& g : cur) {
      for (const auto& sub : split_inside(g, d)) {
        const Interval img = range(sub);
        if (img.is_point()) {
          const Rational v = f.eval(img.lo);
          next.push_back(PLMap({{sub.domain().lo, v}, {sub.domain().hi, v}}));
        } else {
          next.push_back(compose(f.restrict(img), sub));
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Interval negate(const Interval& i) { return Interval(-i.hi, -i.lo); }

std::vector<Interval> negate(const std::vector<Interval>& parts) {
  std::vector<Interval> out;
  out.reserve(parts.size());
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) out.push_back(negate(*it));
  return out;
}

// ---------------------------------------------------------------------------

PLDynamics::PLDynamics(PLMap map, std::string id) : map_(std::move(map)), id_(std::move(id)) {}

Rational PLDynamics::eval(const Rational& x) const { return tranent::eval(map_, x); }

Interval PLDynamics::image(const Interval& k) const { return range_on(map_, k); }

PLMap PLDynamics::restrict(const Interval& w) const { return tranent::restrict(map_, w); }

// ---------------------------------------------------------------------------

ReflectedDynamics::ReflectedDynamics(DynamicsPtr inner) : inner_(std::move(inner)) {}

std::string ReflectedDynamics::id() const { return "reflect(" + inner_->id() + ")"; }

Domain ReflectedDynamics::domain() const {
  const Domain d = inner_->domain();
  Domain out;
  if (d.hi) out.lo = Rational(-*d.hi);
  if (d.lo) out.hi = Rational(-*d.lo);
  return out;
}

Rational ReflectedDynamics::eval(const Rational& x) const { return -inner_->eval(Rational(-x)); }

Interval ReflectedDynamics::image(const Interval& k) const { return negate(inner_->image(negate(k))); }

PLMap ReflectedDynamics::restrict(const Interval& w) const {
  const PLMap m = inner_->restrict(negate(w));
  std::vector<Node> out;
  for (auto it = m.nodes().rbegin(); it != m.nodes().rend(); ++it) out.push_back({-it->x, -it->y});
  return PLMap(std::move(out));
}

std::vector<Rational> ReflectedDynamics::accumulation_points() const {
  std::vector<Rational> out;
  for (const auto& a : inner_->accumulation_points()) out.push_back(-a);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Interval> ReflectedDynamics::fixed_points(const Interval& w) const {
  return negate(inner_->fixed_points(negate(w)));
}

std::vector<Interval> ReflectedDynamics::solve(const Rational& c, const Interval& w) const {
  return negate(inner_->solve(Rational(-c), negate(w)));
}

// ---------------------------------------------------------------------------

ShiftedIterate::ShiftedIterate(DynamicsPtr inner, int power, Rational shift, Domain domain)
    : inner_(std::move(inner)), power_(power), shift_(std::move(shift)), domain_(std::move(domain)) {
  if (power_ < 1) throw Error(ErrorCode::InvalidArgument, "iterate power must be positive");
}

std::string ShiftedIterate::id() const {
  std::string s = inner_->id() + "^" + std::to_string(power_);
  if (shift_ != 0) s += "@" + to_string(shift_);
  return s;
}

Rational ShiftedIterate::eval(const Rational& x) const {
  if (!domain_.contains(x)) throw Error(ErrorCode::OutOfDomain, "point " + to_string(x) + " outside " + id());
  return inner_->eval_n(Rational(x + shift_), power_) - shift_;
}

Interval ShiftedIterate::image(const Interval& k) const {
  if (!domain_.contains(k)) throw Error(ErrorCode::OutOfDomain, "interval " + to_string(k) + " outside " + id());
  const Interval img = inner_->image_n(Interval(k.lo + shift_, k.hi + shift_), power_);
  return Interval(img.lo - shift_, img.hi - shift_);
}

PLMap ShiftedIterate::restrict(const Interval& w) const {
  if (!domain_.contains(w)) throw Error(ErrorCode::OutOfDomain, "window " + to_string(w) + " outside " + id());
  const PLMap m = restrict_iterate(*inner_, Interval(w.lo + shift_, w.hi + shift_), power_);
  std::vector<Node> out;
  for (const auto& n : m.nodes()) out.push_back({n.x - shift_, n.y - shift_});
  return PLMap(std::move(out));
}

std::vector<Rational> ShiftedIterate::accumulation_points() const {
  std::vector<Rational> out;
  for (const auto& a : inner_->accumulation_points()) out.push_back(a - shift_);
  return out;
}

}  // namespace tranent
