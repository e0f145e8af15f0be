#include "tranent/horseshoe.hpp"

#include <algorithm>

#include "tranent/error.hpp"

namespace tranent {

namespace {

[[noreturn]] void step_failed(const std::string& step) { throw Error(ErrorCode::ConstructionFailed, step); }

// First point of the first solution component of f = c on w that lies
// strictly right of `after`.
std::optional<Rational> first_solution_after(const Dynamics& f, const Rational& c, const Interval& w,
                                             const Rational& after) {
  for (const auto& s : f.solve(c, w)) {
    if (s.hi <= after) continue;
    return s.lo > after ? s.lo : after;
  }
  return std::nullopt;
}

Rational leftmost_solution(const Dynamics& f, const Rational& c, const Interval& w, const std::string& step) {
  const auto sols = f.solve(c, w);
  if (sols.empty()) step_failed(step);
  return sols.front().lo;
}

IntervalUnion images_of(const Dynamics& f, const IntervalUnion& piece, int n) {
  IntervalUnion out;
  for (const auto& c : piece) out.push_back(f.image_n(c, n));
  return normalize(std::move(out));
}

std::optional<Rational> uncovered_point(const IntervalUnion& parts, const Interval& base) {
  Rational cursor = base.lo;
  for (const auto& p : parts) {
    if (p.hi < cursor) continue;
    if (p.lo > cursor) return (cursor + min(p.lo, base.hi)) / 2;
    cursor = max(cursor, p.hi);
    if (cursor >= base.hi) return std::nullopt;
  }
  if (cursor < base.hi) return (cursor + base.hi) / 2;
  return std::nullopt;
}

Interval shift(const Interval& i, const Rational& by) { return Interval(i.lo + by, i.hi + by); }

QuasiHorseshoe transform(const QuasiHorseshoe& h, bool reflect, const Rational& by) {
  QuasiHorseshoe out = h;
  if (reflect) {
    out.base = negate(h.base);
    out.pieces.clear();
    for (auto it = h.pieces.rbegin(); it != h.pieces.rend(); ++it) out.pieces.push_back(negate(*it));
  }
  out.base = shift(out.base, by);
  for (auto& piece : out.pieces) {
    for (auto& c : piece) c = shift(c, by);
  }
  return out;
}

FinderResult transform(const FinderResult& r, bool reflect, const Rational& by) {
  FinderResult out = r;
  out.raw = transform(r.raw, reflect, by);
  out.certificate = transform(r.certificate, reflect, by);
  out.window = shift(reflect ? negate(r.window) : r.window, by);
  for (auto& [name, x] : out.chain) x = (reflect ? Rational(-x) : x) + by;
  return out;
}

// Verifies the raw construction, loosens it and re-verifies the result.
FinderResult finish(std::string variant, QuasiHorseshoe raw, const Dynamics& f, const Interval& window,
                    std::vector<std::pair<std::string, Rational>> chain) {
  const Verdict v = verify(raw, f);
  if (!v.ok) throw Error(ErrorCode::InvariantViolated, "construction did not verify: " + v.reason);
  FinderResult r;
  r.variant = std::move(variant);
  r.window = window;
  r.chain = std::move(chain);
  r.raw = raw;
  auto loosened = loosen(raw, f);
  if (auto* q = std::get_if<QuasiHorseshoe>(&loosened)) {
    const Verdict lv = verify(*q, f);
    if (!lv.ok || lv.kind != HorseshoeKind::Loose) {
      throw Error(ErrorCode::InvariantViolated, "loosened certificate did not verify: " + lv.reason);
    }
    r.certificate = *q;
    r.kind = HorseshoeKind::Loose;
    r.loosened = true;
  } else {
    r.certificate = std::move(raw);
    r.kind = v.kind;
  }
  return r;
}

// Verdict computed on the original map after moving a certificate back.
void recheck(const FinderResult& r, const Dynamics& f) {
  for (const auto* h : {&r.raw, &r.certificate}) {
    const Verdict v = verify(*h, f);
    if (!v.ok) throw Error(ErrorCode::InvariantViolated, "transformed certificate did not verify: " + v.reason);
  }
}

Interval schedule_window(const Dynamics& f, int j) {
  const Rational r = pow2(j);
  const auto w = f.domain().clip(Interval(-r, r));
  if (!w) throw Error(ErrorCode::NotApplicable, "search window misses the domain");
  return *w;
}

// Largest fixed point <= x and smallest fixed point >= x in the census.
std::optional<Rational> fixed_below(const std::vector<Interval>& census, const Rational& x) {
  std::optional<Rational> best;
  for (const auto& c : census) {
    if (c.lo <= x) best = min(c.hi, x);
  }
  return best;
}

std::optional<Rational> fixed_above(const std::vector<Interval>& census, const Rational& x) {
  for (const auto& c : census) {
    if (c.hi >= x) return max(c.lo, x);
  }
  return std::nullopt;
}

// Construction for adjacent fixed points a < b with f > x on (a, b).
FinderResult two_fixed_rising(const Dynamics& f, const Rational& a, const Rational& b, const Interval& w) {
  const auto c = first_solution_after(f, a, Interval(b, w.hi), b);
  if (!c) step_failed("c");
  const Rational z = f.image(Interval(a, *c)).hi;
  if (z <= *c) step_failed("z>c");
  const Rational d = leftmost_solution(f, z, Interval(a, *c), "d");
  QuasiHorseshoe raw{Interval(a, *c), {{Interval(a, d)}, {Interval(d, *c)}}, 1, f.id()};
  return finish("two-fixed", std::move(raw), f, w, {{"a", a}, {"b", b}, {"c", *c}, {"z", z}, {"d", d}});
}

FinderResult halfline_at(const Dynamics& g, const Interval& w, int j) {
  const Rational o = w.lo;
  const auto census = fixed_point_census(g, w, j);
  std::optional<Rational> z1;
  for (const auto& c : census) {
    if (c.hi <= o) continue;
    z1 = c.lo > o ? c.lo : c.hi;
    break;
  }
  if (!z1) step_failed("z1");
  const Rational a = g.image(Interval(o, *z1)).hi;
  if (a <= *z1) step_failed("a>z1");
  if (a > w.hi) step_failed("window");
  const Rational b = g.image(Interval(o, a)).hi;
  if (b <= a) step_failed("b>a");
  const Rational p = leftmost_solution(g, b, Interval(*z1, a), "p");
  const auto u = fixed_below(census, p);
  const auto v = fixed_above(census, p);
  if (!u) step_failed("u");
  if (!v) step_failed("v");
  const auto q = first_solution_after(g, *u, Interval(*v, w.hi), *v - 1);
  if (!q) step_failed("q");
  const auto wp = fixed_below(census, *q);
  const auto y = fixed_above(census, *q);
  if (!wp) step_failed("w");
  if (!y) step_failed("y");
  const Rational d = g.image(Interval(o, *y)).hi;
  if (d <= *y) step_failed("d>y");
  const Rational r = leftmost_solution(g, d, Interval(*u, *wp), "r");
  QuasiHorseshoe raw{Interval(*u, *y), {{Interval(*u, r)}, {Interval(r, *q)}, {Interval(*q, *y)}}, 1, g.id()};
  return finish("halfline", std::move(raw), g, w,
                {{"z1", *z1}, {"a", a}, {"b", b}, {"p", p}, {"u", *u}, {"v", *v}, {"q", *q}, {"w", *wp},
                 {"y", *y}, {"d", d}, {"r", r}});
}

// Case II point chain for the unique fixed point z, needing some a < z with f(a) = z.
std::optional<FinderResult> unique_fixed_chain(const Dynamics& f, const Rational& z, const Interval& w) {
  std::optional<Rational> a;
  for (const auto& s : f.solve(z, Interval(w.lo, z))) {
    if (s.lo < z) {
      a = s.lo;
      break;
    }
  }
  if (!a) return std::nullopt;
  const auto b = first_solution_after(f, *a, Interval(z, w.hi), z);
  if (!b) step_failed("b");
  const Rational c = f.image(Interval(*a, z)).hi;
  if (c <= *b) step_failed("c>b");
  if (c > w.hi) step_failed("window");
  const Rational p = leftmost_solution(f, c, Interval(*a, z), "p");
  const Rational d = f.image(Interval(*a, c)).lo;
  if (d >= *a) step_failed("d<a");
  if (d < w.lo) step_failed("window");
  const Rational q = leftmost_solution(f, d, Interval(*b, c), "q");
  const Rational e = f.image(Interval(d, c)).hi;
  if (e <= c) step_failed("e>c");
  const Rational r = leftmost_solution(f, e, Interval(d, *a), "r");
  const auto s = first_solution_after(f, p, Interval(z, *b), z);
  if (!s) step_failed("s");
  const auto t = first_solution_after(f, r, Interval(*b, c), *b);
  if (!t) step_failed("t");
  QuasiHorseshoe raw{Interval(z, c), {{Interval(z, *s)}, {Interval(*s, *b)}, {Interval(*b, *t)}}, 2, f.id()};
  return finish("unique-fixed", std::move(raw), f, w,
                {{"z", z}, {"a", *a}, {"b", *b}, {"c", c}, {"p", p}, {"d", d}, {"q", q}, {"e", e}, {"r", r},
                 {"s", *s}, {"t", *t}});
}

bool single_point(const std::vector<Interval>& census) { return census.size() == 1 && census.front().is_point(); }

}  // namespace

std::string_view to_string(HorseshoeKind k) {
  switch (k) {
    case HorseshoeKind::Tight: return "tight";
    case HorseshoeKind::Loose: return "loose";
    case HorseshoeKind::Neither: return "neither";
  }
  return "neither";
}

Verdict verify(const QuasiHorseshoe& h, const Dynamics& f) {
  Verdict v;
  auto fail = [&](std::string reason, std::optional<Rational> witness) {
    v.ok = false;
    v.reason = std::move(reason);
    v.witness = std::move(witness);
    return v;
  };
  if (h.s() < 2) return fail("fewer than two pieces", std::nullopt);
  if (h.iterate < 1) return fail("iterate must be positive", std::nullopt);
  if (h.base.is_point()) return fail("base is a single point", h.base.lo);
  if (!f.domain().contains(h.base)) return fail("base outside the domain", h.base.lo);
  for (const auto& piece : h.pieces) {
    if (piece.empty()) return fail("empty piece", std::nullopt);
    for (const auto& c : piece) {
      if (!h.base.contains(c)) {
        return fail("piece " + to_string(c) + " not inside base " + to_string(h.base), h.base.contains(c.lo) ? c.hi : c.lo);
      }
    }
  }
  for (std::size_t i = 0; i < h.s(); ++i) {
    for (std::size_t k = 0; k < h.s(); ++k) {
      for (std::size_t ci = 0; ci < h.pieces[i].size(); ++ci) {
        for (std::size_t ck = 0; ck < h.pieces[k].size(); ++ck) {
          if (i == k && ci == ck) continue;
          if (i == k && ci > ck) continue;
          const Interval& x = h.pieces[i][ci];
          const Interval& y = h.pieces[k][ck];
          if (x.interiors_overlap(y)) {
            const Interval common = intersect(x, y);
            return fail("interiors overlap at " + to_string(common), common.midpoint());
          }
        }
      }
    }
  }
  bool exact_images = true;
  try {
    for (std::size_t i = 0; i < h.s(); ++i) {
      const IntervalUnion img = images_of(f, h.pieces[i], h.iterate);
      if (auto gap = uncovered_point(img, h.base)) {
        return fail("image of piece " + std::to_string(i + 1) + " misses part of the base", *gap);
      }
      exact_images = exact_images && img.size() == 1 && img.front() == h.base;
    }
  } catch (const Error& e) {
    return fail(std::string("evaluation failed: ") + e.what(), std::nullopt);
  }
  v.ok = true;
  IntervalUnion all;
  for (const auto& piece : h.pieces) all.insert(all.end(), piece.begin(), piece.end());
  const Rational covered = measure(normalize(std::move(all)));
  if (covered < h.base.length()) {
    v.kind = HorseshoeKind::Loose;
  } else if (exact_images) {
    v.kind = HorseshoeKind::Tight;
  } else {
    v.kind = HorseshoeKind::Neither;
  }
  return v;
}

namespace {

// Crossings of `base` by the PL pieces, restricted to `window`.
std::vector<Interval> crossings_in(const std::vector<PLMap>& pieces, const Interval& window, const Interval& base) {
  std::vector<Interval> out;
  for (const PLMap& full : pieces) {
    const Interval dom = full.domain();
    if (!dom.interiors_overlap(window)) continue;
    const PLMap g = restrict(full, intersect(dom, window));
    // Solution components tagged by which end of the base they hit.
    std::vector<std::pair<Interval, int>> hits;
    for (const auto& s : solve_eq(g, base.lo)) hits.emplace_back(s, 0);
    for (const auto& s : solve_eq(g, base.hi)) hits.emplace_back(s, 1);
    std::sort(hits.begin(), hits.end(), [](const auto& x, const auto& y) { return x.first.lo < y.first.lo; });
    for (std::size_t i = 0; i + 1 < hits.size(); ++i) {
      if (hits[i].second != hits[i + 1].second) out.emplace_back(hits[i].first.hi, hits[i + 1].first.lo);
    }
  }
  return out;
}

}  // namespace

std::vector<Interval> covering_crossings(const Dynamics& f, const Interval& w, const Interval& base, int n) {
  return crossings_in(partial_iterate(f, w, n), w, base);
}

std::variant<QuasiHorseshoe, TightReport> loosen(const QuasiHorseshoe& h, const Dynamics& f) {
  const Verdict v = verify(h, f);
  if (!v.ok) throw Error(ErrorCode::InvariantViolated, "cannot loosen an invalid certificate: " + v.reason);
  QuasiHorseshoe out = h;
  for (auto& piece : out.pieces) {
    for (const auto& c : piece) {
      if (c.is_point()) continue;
      const auto crossings = covering_crossings(f, c, h.base, h.iterate);
      if (!crossings.empty()) {
        piece = {crossings.front()};
        break;
      }
    }
  }
  IntervalUnion all;
  for (const auto& piece : out.pieces) all.insert(all.end(), piece.begin(), piece.end());
  if (measure(normalize(std::move(all))) < h.base.length()) return out;
  return TightReport{h, "every piece is needed in full to cover the base"};
}

std::vector<Interval> fixed_point_census(const Dynamics& f, const Interval& w, int j) {
  try {
    return f.fixed_points(w);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AccumulationPoint) throw;
  }
  const Rational delta = pow2(-j);
  std::vector<Rational> acc;
  for (const auto& a : f.accumulation_points()) {
    if (w.contains(a)) acc.push_back(a);
  }
  std::sort(acc.begin(), acc.end());
  IntervalUnion found;
  Rational cursor = w.lo;
  auto scan = [&](const Rational& lo, const Rational& hi) {
    if (lo > hi) return;
    for (const auto& c : f.fixed_points(Interval(lo, hi))) found.push_back(c);
  };
  for (const auto& a : acc) {
    scan(cursor, a - delta);
    try {
      if (f.eval(a) == a) found.push_back(Interval::point(a));
    } catch (const Error&) {
    }
    cursor = a + delta;
  }
  scan(cursor, w.hi);
  return normalize(std::move(found));
}

DichotomyResult dichotomy(const Dynamics& f, const Interval& window) {
  std::vector<Interval> census;
  try {
    census = f.fixed_points(window);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AccumulationPoint) throw;
    throw Error(ErrorCode::NotApplicable, "fixed points accumulate in " + to_string(window));
  }
  if (!single_point(census)) {
    throw Error(ErrorCode::NotApplicable,
                "expected one fixed point in " + to_string(window) + ", found " + std::to_string(census.size()));
  }
  const Rational c = census.front().lo;
  const Interval left(window.lo, c);
  const Interval right(c, window.hi);
  const Interval left_image = f.image(left);
  const Interval right_image = f.image(right);
  if (left_image.lo >= c && right_image.hi <= c) return SwapStructure{c, left, right, left_image, right_image};
  auto witness_for = [&](const Interval& side, bool low) -> BitransitiveEvidence {
    Interval wit = side;
    try {
      const PLMap m = f.restrict(side);
      wit = low ? Interval(argmin_on(m, side), c) : Interval(c, argmax_on(m, side));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::AccumulationPoint) throw;
    }
    return BitransitiveEvidence{c, wit, f.image(wit)};
  };
  if (left_image.lo < c) return witness_for(left, true);
  return witness_for(right, false);
}

FinderResult find_two_fixed(const DynamicsPtr& f, WindowSchedule schedule) {
  std::string last_step = "no adjacent fixed points";
  bool any_pair = false;
  for (int j = schedule.first; j <= schedule.last; ++j) {
    const Interval w = schedule_window(*f, j);
    const auto census = fixed_point_census(*f, w, j);
    for (std::size_t i = 0; i + 1 < census.size(); ++i) {
      any_pair = true;
      const Rational a = census[i].hi;
      const Rational b = census[i + 1].lo;
      const bool rising = f->eval((a + b) / 2) > (a + b) / 2;
      try {
        if (rising) return two_fixed_rising(*f, a, b, w);
        const auto reflected = std::make_shared<ReflectedDynamics>(f);
        FinderResult r = transform(two_fixed_rising(*reflected, -b, -a, negate(w)), true, 0);
        for (auto* h : {&r.raw, &r.certificate}) h->map_id = f->id();
        recheck(r, *f);
        return r;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ConstructionFailed) throw;
        last_step = e.detail();
      }
    }
  }
  if (!any_pair) throw Error(ErrorCode::NotApplicable, "fewer than two fixed points in every search window");
  throw Error(ErrorCode::ConstructionFailed, last_step);
}

FinderResult find_halfline(const DynamicsPtr& g, WindowSchedule schedule) {
  const Domain d = g->domain();
  if (!d.lo || d.hi) throw Error(ErrorCode::NotApplicable, "half-line finder needs a domain [o, ∞)");
  std::string last_step;
  for (int j = schedule.first; j <= schedule.last; ++j) {
    const Interval w(*d.lo, *d.lo + pow2(j));
    try {
      return halfline_at(*g, w, j);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConstructionFailed) throw;
      last_step = e.detail();
    }
  }
  throw Error(ErrorCode::ConstructionFailed, last_step);
}

FinderResult find_unique_fixed(const DynamicsPtr& f, WindowSchedule schedule) {
  std::string last_step;
  for (int j = schedule.first; j <= schedule.last; ++j) {
    const Interval w = schedule_window(*f, j);
    const auto census = fixed_point_census(*f, w, j);
    if (!single_point(census)) {
      throw Error(ErrorCode::NotApplicable,
                  "expected a unique fixed point in " + to_string(w) + ", found " + std::to_string(census.size()));
    }
    const Rational z = census.front().lo;
    try {
      if (std::holds_alternative<SwapStructure>(dichotomy(*f, w))) {
        const auto half = std::make_shared<ShiftedIterate>(f, 2, z, Domain::half_line(0));
        FinderResult r = transform(find_halfline(half, schedule), false, z);
        r.variant = "unique-fixed/swap";
        for (auto* h : {&r.raw, &r.certificate}) {
          h->iterate = 2;
          h->map_id = f->id();
        }
        recheck(r, *f);
        return r;
      }
      if (auto r = unique_fixed_chain(*f, z, w)) return *r;
      const auto reflected = std::make_shared<ReflectedDynamics>(f);
      auto r = unique_fixed_chain(*reflected, -z, negate(w));
      if (!r) step_failed("a");
      FinderResult out = transform(*r, true, 0);
      for (auto* h : {&out.raw, &out.certificate}) h->map_id = f->id();
      recheck(out, *f);
      return out;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConstructionFailed) throw;
      last_step = e.detail();
    }
  }
  throw Error(ErrorCode::ConstructionFailed, last_step);
}

AmplifyResult amplify(const QuasiHorseshoe& h, const Dynamics& f, int n_max) {
  const Verdict v = verify(h, f);
  if (!v.ok || v.kind != HorseshoeKind::Loose) {
    throw Error(ErrorCode::NotLoose, v.ok ? "certificate is " + std::string(to_string(v.kind)) : v.reason);
  }
  AmplifyResult out;
  std::size_t target = h.s();
  for (int n = 2; n <= n_max; ++n) {
    target *= h.s();
    std::vector<PLMap> pieces;
    try {
      pieces = partial_iterate(f, h.base, n * h.iterate);
    } catch (const Error&) {
      break;
    }
    // Sub-bases bounded by extreme values of the iterate inside the base.
    std::vector<Rational> levels{h.base.lo, h.base.hi};
    for (const auto& g : pieces) {
      for (const auto& node : g.nodes()) {
        if (h.base.contains(node.y)) levels.push_back(node.y);
      }
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::size_t best = 0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      for (std::size_t k = levels.size(); k-- > i + 1;) {
        const Interval sub(levels[i], levels[k]);
        const auto crossings = crossings_in(pieces, sub, sub);
        best = std::max(best, crossings.size());
        if (crossings.size() < target + 1) continue;
        QuasiHorseshoe cand{sub, {}, n * h.iterate, h.map_id};
        for (std::size_t c = 0; c <= target; ++c) cand.pieces.push_back({crossings[c]});
        if (verify(cand, f).ok) {
          out.crossings.push_back(crossings.size());
          out.certificate = std::move(cand);
          out.depth = n;
          return out;
        }
      }
    }
    out.crossings.push_back(best);
  }
  return out;
}

}  // namespace tranent
