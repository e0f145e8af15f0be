#include "tranent/specification.hpp"

#include <algorithm>

#include "tranent/error.hpp"

namespace tranent {

namespace {

constexpr int kMaxSteps = 10000;

enum class Geometry { Line, HalfLine, Compact };

Geometry geometry_of(const Dynamics& f) {
  if (const auto* line = dynamic_cast<const LineDynamics*>(&f)) {
    if (std::holds_alternative<MirrorTranslationTiled>(line->map())) return Geometry::Line;
    if (std::holds_alternative<HalfLineTiled>(line->map())) return Geometry::HalfLine;
  }
  if (dynamic_cast<const CompactifiedDynamics*>(&f)) return Geometry::Compact;
  throw Error(ErrorCode::NotApplicable, "travel times are defined for translation-tiled, half-line and "
                                        "compactified maps, not " + f.id());
}

const char* geometry_name(Geometry g) {
  switch (g) {
    case Geometry::Line: return "line";
    case Geometry::HalfLine: return "half-line";
    case Geometry::Compact: return "compact";
  }
  return "line";
}

// Closed interval meets the open eps-ball around c.
bool meets_ball(const Interval& k, const Rational& c, const Rational& eps) {
  return k.lo < c + eps && k.hi > c - eps;
}

std::vector<Rational> targets_at(Geometry g, int n) {
  switch (g) {
    case Geometry::Line: return {Rational(n + 1), Rational(-(n + 1))};
    case Geometry::HalfLine: return {pow2(n)};
    case Geometry::Compact:
      return {DyadicCompactification::h(Rational(n + 1)), DyadicCompactification::h(Rational(-(n + 1)))};
  }
  return {};
}

}  // namespace

void SpecInstance::validate() const {
  if (targets.empty()) throw Error(ErrorCode::InvalidArgument, "instance needs at least one target");
  if (eps <= 0) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  if (targets.front().first != 0) throw Error(ErrorCode::InvalidArgument, "first window must start at 0");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i].last < targets[i].first) throw Error(ErrorCode::InvalidArgument, "window ends before it starts");
    if (i == 0) continue;
    const int g = targets[i].first - targets[i - 1].last;
    if (g <= 0 || g < gap) {
      throw Error(ErrorCode::InvalidArgument, "windows " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                                  " are closer than the gap");
    }
  }
}

std::vector<Interval> periodic_points(const Dynamics& f, int period, const Interval& w) {
  if (period < 1) throw Error(ErrorCode::InvalidArgument, "period must be positive");
  if (w.is_point()) {
    if (f.eval_n(w.lo, period) == w.lo) return {w};
    return {};
  }
  IntervalUnion out;
  for (const PLMap& g : partial_iterate(f, w, period)) {
    for (const auto& c : fixed_points(g)) out.push_back(c);
  }
  return normalize(std::move(out));
}

RefutationCertificate travel_time_table(const Dynamics& f, const Rational& eps, int n_lo, int n_hi) {
  if (eps <= 0) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  if (n_lo < 1 || n_hi < n_lo) throw Error(ErrorCode::InvalidArgument, "scale range must satisfy 1 <= lo <= hi");
  const Geometry g = geometry_of(f);
  RefutationCertificate cert;
  cert.map_id = f.id();
  cert.geometry = geometry_name(g);
  cert.eps = eps;

  Rational lipschitz = 1;
  switch (g) {
    case Geometry::Line:
      cert.source = Interval(-eps, eps);
      for (int r = 1; r <= 16; ++r) {
        const Interval k(Rational(-r), Rational(r));
        const Interval img = f.image(k);
        const Interval allowed(Rational(-r - 1), Rational(r + 1));
        cert.displacement.push_back({Rational(r), img, allowed, allowed.contains(img)});
      }
      break;
    case Geometry::HalfLine: {
      cert.source = Interval(0, eps);
      lipschitz = global_lipschitz(dynamic_cast<const LineDynamics&>(f).map());
      for (int k = 0; k <= 16; ++k) {
        const Rational r = pow2(k);
        const Interval img = f.image(Interval(0, r));
        const Interval allowed(0, lipschitz * r);
        cert.displacement.push_back({r, img, allowed, allowed.contains(img)});
      }
      break;
    }
    case Geometry::Compact: {
      const Rational c = DyadicCompactification::h(0);
      cert.source = Interval(max(Rational(0), Rational(c - eps)), min(Rational(1), Rational(c + eps)));
      break;
    }
  }

  for (int n = n_lo; n <= n_hi; ++n) {
    TravelEntry e;
    e.n = n;
    e.target = targets_at(g, n).front();
    if (g == Geometry::Line) {
      // Source inside [-r0, r0]; each step widens by at most 1.
      const Integer r0 = ceil(eps);
      int m = 0;
      while (Rational(r0 + m) <= n + 1 - eps) ++m;
      e.lower_bound = m;
    } else if (g == Geometry::HalfLine) {
      // f(0) = 0 and slopes bounded by L: f^m([0, eps]) inside [0, eps L^m].
      int m = 0;
      Rational reach = eps;
      while (reach <= e.target - eps && m < kMaxSteps && lipschitz > 1) {
        reach *= lipschitz;
        ++m;
      }
      e.lower_bound = m;
    }
    cert.table.push_back(std::move(e));
  }

  Interval cur = cert.source;
  std::size_t open = cert.table.size();
  for (int m = 0; m <= kMaxSteps && open > 0; ++m) {
    if (m > 0) cur = f.image(cur);
    for (auto& e : cert.table) {
      if (e.steps) continue;
      for (const auto& t : targets_at(g, e.n)) {
        if (meets_ball(cur, t, eps)) {
          e.steps = m;
          e.target = t;
          --open;
          break;
        }
      }
    }
  }

  for (const auto& e : cert.table) {
    if (!e.steps || *e.steps < 2) continue;
    const int g_time = *e.steps - 1;
    SpecInstance inst;
    inst.eps = eps;
    inst.gap = g_time;
    inst.targets = {{Rational(0), 0, 0}, {e.target, g_time, g_time}};
    cert.obstructed.push_back(std::move(inst));
  }
  return cert;
}

SpecVerdict refute_specification(const Dynamics& f, const Rational& eps, int n_lo, int n_hi) {
  SpecVerdict v;
  v.evidence = travel_time_table(f, eps, n_lo, n_hi);
  const auto& table = v.evidence.table;
  const bool compact = v.evidence.geometry == "compact";
  auto fail = [&](std::string why) {
    v.refuted = false;
    v.reason = std::move(why);
    return v;
  };
  for (const auto& e : table) {
    if (!e.steps) return fail("scale " + std::to_string(e.n) + " not reached within " + std::to_string(kMaxSteps) +
                              " steps");
  }
  if (compact) {
    int worst = 0;
    for (const auto& e : table) worst = std::max(worst, *e.steps);
    return fail("travel times stay bounded (at most " + std::to_string(worst) + ") on the compact interval");
  }
  for (const auto& d : v.evidence.displacement) {
    if (!d.holds) return fail("displacement check fails at radius " + to_string(d.radius));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& e = table[i];
    if (*e.steps < e.lower_bound) return fail("travel time below its displacement bound at n=" + std::to_string(e.n));
    if (v.evidence.geometry == "line" && *e.steps < e.n - 1) {
      return fail("travel time below n-1 at n=" + std::to_string(e.n));
    }
    if (i > 0 && *e.steps < *table[i - 1].steps) return fail("travel times are not monotone");
  }
  if (!(*table.back().steps > *table.front().steps)) return fail("travel times do not grow over the tested range");
  v.refuted = true;
  v.reason = "travel times grow with the scale, so no uniform gap works";
  return v;
}

bool traces(const Dynamics& f, const SpecInstance& inst, const Interval& y) {
  for (const auto& t : inst.targets) {
    Interval img = f.image_n(y, t.first);
    Rational c = f.eval_n(t.y, t.first);
    for (int i = t.first; i <= t.last; ++i) {
      if (i > t.first) {
        img = f.image(img);
        c = f.eval(c);
      }
      if (!(c - inst.eps < img.lo && img.hi < c + inst.eps)) return false;
    }
  }
  return true;
}

TraceResult trace_search(const Dynamics& f, const SpecInstance& inst, int depth, const Dynamics* exact,
                         std::size_t budget) {
  inst.validate();
  const int horizon = inst.targets.back().last;
  if (horizon > depth) {
    throw Error(ErrorCode::InvalidArgument, "instance windows reach time " + std::to_string(horizon) +
                                                " beyond depth " + std::to_string(depth));
  }
  const Domain dom = f.domain();
  if (!dom.lo || !dom.hi) throw Error(ErrorCode::InvalidArgument, "trace search needs a compact domain");
  const Dynamics& judge = exact ? *exact : f;

  // Orbit of each target point, needed at the times of its window.
  std::vector<std::vector<Rational>> orbit;
  for (const auto& t : inst.targets) {
    std::vector<Rational> o{t.y};
    for (int i = 1; i <= t.last; ++i) o.push_back(f.eval(o.back()));
    orbit.push_back(std::move(o));
  }

  TraceResult out;
  std::vector<PLMap> pieces{PLMap::identity(Interval(*dom.lo, *dom.hi))};
  for (int i = 0; i <= horizon; ++i) {
    for (std::size_t m = 0; m < inst.targets.size(); ++m) {
      const auto& t = inst.targets[m];
      if (i < t.first || i > t.last) continue;
      const Rational& c = orbit[m][i];
      const Domain tube{Rational(c - inst.eps), Rational(c + inst.eps)};
      std::vector<PLMap> kept;
      for (const auto& g : pieces) {
        for (auto& sub : split_inside(g, tube)) kept.push_back(std::move(sub));
      }
      pieces = std::move(kept);
    }
    for (const auto& g : pieces) out.pieces_explored += g.nodes().size();
    if (out.pieces_explored > budget) {
      out.capped = true;
      return out;
    }
    if (pieces.empty()) return out;
    if (i == horizon) break;
    std::vector<PLMap> next;
    for (const auto& g : pieces) {
      const Interval img = range(g);
      if (img.is_point()) {
        const Rational v = f.eval(img.lo);
        next.push_back(PLMap({{g.domain().lo, v}, {g.domain().hi, v}}));
      } else {
        next.push_back(compose(f.restrict(img), g));
      }
    }
    pieces = std::move(next);
  }

  IntervalUnion found;
  for (const auto& g : pieces) found.push_back(g.domain());
  found = normalize(std::move(found));
  std::stable_partition(found.begin(), found.end(),
                        [&](const Interval& c) { return c.contains(inst.targets.front().y); });
  for (const auto& c : found) {
    Interval y = c;
    for (int shrink = 0; shrink < 12; ++shrink) {
      if (traces(judge, inst, y)) {
        out.interval = y;
        return out;
      }
      const Rational quarter = y.length() / 4;
      y = Interval(y.lo + quarter, y.hi - quarter);
    }
  }
  return out;
}

}  // namespace tranent
