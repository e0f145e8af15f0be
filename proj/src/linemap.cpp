#include "tranent/linemap.hpp"

#include <algorithm>

#include "tranent/error.hpp"

namespace tranent {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_unit_template(const PLMap& t, const char* kind) {
  if (t.domain() != Interval(0, 1)) {
    throw Error(ErrorCode::InvariantViolated, std::string(kind) + " template must live on [0,1]");
  }
  if (eval(t, 0) != 1 || eval(t, 1) != 0) {
    throw Error(ErrorCode::InvariantViolated, std::string(kind) + " template must satisfy t(0)=1 and t(1)=0");
  }
}

long to_long(const Integer& z) { return z.get_si(); }

// Index k of a dyadic tile I_k = [-2^-k, -2^(-k-1)] containing x < 0.
long dyadic_tile(const Rational& x) { return -floor_log2(Rational(-x)) - 1; }

Rational translation_eval(const MirrorTranslationTiled& m, const Rational& x) {
  if (x > 0) return -x;
  const Integer n = floor(x);
  return eval(m.tmpl, Rational(x - n)) - n - 1;
}

Rational dyadic_eval(const DyadicMirrorTiled& m, const Rational& x) {
  if (x > 0) return -x;
  if (x == 0) return 0;
  const long k = dyadic_tile(x);
  const Rational scale = pow2(-k - 1);
  return scale * (1 + eval(m.tmpl, Rational(x / scale + 2)));
}

PLMap sample(const std::vector<Rational>& xs, auto&& f) {
  std::vector<Node> nodes;
  nodes.reserve(xs.size());
  for (const auto& x : xs) nodes.push_back({x, f(x)});
  return PLMap(std::move(nodes));
}

std::vector<Rational> sorted_unique(std::vector<Rational> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<Rational> translation_breakpoints(const MirrorTranslationTiled& m, const Interval& w) {
  std::vector<Rational> xs{w.lo, w.hi};
  if (w.lo < 0 && 0 < w.hi) xs.emplace_back(0);
  if (w.lo < 0) {
    const Rational neg_hi = min(w.hi, Rational(0));
    for (Integer n = floor(w.lo); n < ceil(neg_hi); ++n) {
      for (const auto& node : m.tmpl.nodes()) {
        Rational x = n + node.x;
        if (w.lo < x && x < w.hi) xs.push_back(std::move(x));
      }
    }
  }
  return sorted_unique(std::move(xs));
}

std::vector<Rational> dyadic_breakpoints(const DyadicMirrorTiled& m, const Interval& w) {
  std::vector<Rational> xs{w.lo, w.hi};
  if (w.hi < 0) {
    const long k_first = dyadic_tile(w.lo);
    const long k_last = dyadic_tile(w.hi);
    for (long k = k_first; k <= k_last; ++k) {
      const Rational left = -pow2(-k);
      const Rational width = pow2(-k - 1);
      for (const auto& node : m.tmpl.nodes()) {
        Rational x = left + node.x * width;
        if (w.lo < x && x < w.hi) xs.push_back(std::move(x));
      }
    }
  }
  return sorted_unique(std::move(xs));
}

PLMap dyadic_restrict(const DyadicMirrorTiled& m, const Interval& w) {
  if (w.lo < 0 && w.hi >= 0) {
    throw Error(ErrorCode::AccumulationPoint, "window " + to_string(w) + " reaches the tile accumulation point 0");
  }
  return sample(dyadic_breakpoints(m, w), [&](const Rational& x) { return dyadic_eval(m, x); });
}

// Image of a compact interval under a dyadic map. The piece [lo, 0] uses
// homogeneity: G([-2^-j, 0]) = 2^-j · hull({0} ∪ G(I_0)).
Interval dyadic_image(const DyadicMirrorTiled& m, const Interval& k) {
  std::vector<Interval> parts;
  if (k.hi > 0) parts.emplace_back(-k.hi, -max(k.lo, Rational(0)));
  if (k.lo <= 0) {
    const Rational b = min(k.hi, Rational(0));
    if (k.lo == b) {
      parts.push_back(Interval::point(dyadic_eval(m, k.lo)));
    } else if (b < 0) {
      parts.push_back(range(dyadic_restrict(m, Interval(k.lo, b))));
    } else {
      const long j = dyadic_tile(k.lo);
      const Rational split = -pow2(-j - 1);
      if (k.lo < split) parts.push_back(range(dyadic_restrict(m, Interval(k.lo, split))));
      const Interval base = range(m.tmpl);  // G(I_0) = (1 + base) / 2
      const Interval unit = hull(Interval::point(0), Interval((1 + base.lo) / 2, (1 + base.hi) / 2));
      const Rational scale = pow2(-j - 1);
      parts.emplace_back(unit.lo * scale, unit.hi * scale);
    }
  }
  Interval out = parts.front();
  for (const auto& p : parts) out = hull(out, p);
  return out;
}

Interval translation_image(const MirrorTranslationTiled& m, const Interval& k) {
  std::vector<Interval> parts;
  if (k.hi > 0) parts.emplace_back(-k.hi, -max(k.lo, Rational(0)));
  if (k.lo <= 0) {
    const Rational b = min(k.hi, Rational(0));
    if (k.lo == b) {
      parts.push_back(Interval::point(translation_eval(m, k.lo)));
    } else {
      const Interval w(k.lo, b);
      parts.push_back(range(sample(translation_breakpoints(m, w), [&](const Rational& x) { return translation_eval(m, x); })));
    }
  }
  Interval out = parts.front();
  for (const auto& p : parts) out = hull(out, p);
  return out;
}

void require_half_line(const Interval& w) {
  if (w.lo < 0) throw Error(ErrorCode::OutOfDomain, "half-line map evaluated on " + to_string(w));
}

}  // namespace

MirrorTranslationTiled::MirrorTranslationTiled(PLMap t) : tmpl(std::move(t)) {
  check_unit_template(tmpl, "translation-tiled");
}

DyadicMirrorTiled::DyadicMirrorTiled(PLMap t) : tmpl(std::move(t)) {
  check_unit_template(tmpl, "dyadic-tiled");
  // Adjacent tiles agree at shared endpoints, and each tile image is the
  // scaled copy of the unit one, so the images shrink to {0}.
  const Interval base = range(tmpl);
  for (long k = -20; k <= 20; ++k) {
    const Rational shared = -pow2(-k - 1);
    const Rational from_left = pow2(-k - 1) * (1 + eval(tmpl, 1));
    const Rational from_right = pow2(-k - 2) * (1 + eval(tmpl, 0));
    if (from_left != from_right || dyadic_eval(*this, shared) != from_left) {
      throw Error(ErrorCode::ContinuityViolated, "dyadic tiles disagree at " + to_string(shared));
    }
    const Interval tile_image = range(dyadic_restrict(*this, Interval(-pow2(-k), shared)));
    const Rational scale = pow2(-k - 1);
    if (tile_image != Interval(scale * (1 + base.lo), scale * (1 + base.hi))) {
      throw Error(ErrorCode::ContinuityViolated, "tile image at k=" + std::to_string(k) + " breaks homogeneity");
    }
  }
}

Rational eval_line(const TiledLineMap& m, const Rational& x) {
  return std::visit(overloaded{
                        [&](const MirrorTranslationTiled& t) { return translation_eval(t, x); },
                        [&](const DyadicMirrorTiled& d) { return dyadic_eval(d, x); },
                        [&](const HalfLineTiled& h) {
                          if (x < 0) throw Error(ErrorCode::OutOfDomain, "half-line map at " + to_string(x));
                          return dyadic_eval(h.inner, dyadic_eval(h.inner, x));
                        },
                    },
                    m);
}

PLMap restrict_window(const TiledLineMap& m, const Interval& w) {
  if (w.is_point()) throw Error(ErrorCode::InvalidArgument, "cannot restrict to a single point");
  return std::visit(overloaded{
                        [&](const MirrorTranslationTiled& t) {
                          return sample(translation_breakpoints(t, w),
                                        [&](const Rational& x) { return translation_eval(t, x); });
                        },
                        [&](const DyadicMirrorTiled& d) { return dyadic_restrict(d, w); },
                        [&](const HalfLineTiled& h) {
                          require_half_line(w);
                          if (w.lo == 0) {
                            throw Error(ErrorCode::AccumulationPoint,
                                        "window " + to_string(w) + " reaches the tile accumulation point 0");
                          }
                          std::vector<Rational> xs;
                          for (const auto& x : dyadic_breakpoints(h.inner, negate(w))) xs.push_back(-x);
                          return sample(sorted_unique(std::move(xs)), [&](const Rational& x) {
                            return dyadic_eval(h.inner, dyadic_eval(h.inner, x));
                          });
                        },
                    },
                    m);
}

Interval image_interval(const TiledLineMap& m, const Interval& k, int n) {
  Interval cur = k;
  for (int i = 0; i < n; ++i) {
    cur = std::visit(overloaded{
                         [&](const MirrorTranslationTiled& t) { return translation_image(t, cur); },
                         [&](const DyadicMirrorTiled& d) { return dyadic_image(d, cur); },
                         [&](const HalfLineTiled& h) {
                           require_half_line(cur);
                           return dyadic_image(h.inner, dyadic_image(h.inner, cur));
                         },
                     },
                     m);
  }
  return cur;
}

Rational global_lipschitz(const TiledLineMap& m) {
  return std::visit(overloaded{
                        [](const MirrorTranslationTiled& t) { return max(Rational(1), lipschitz_const(t.tmpl)); },
                        [](const DyadicMirrorTiled& d) { return max(Rational(1), lipschitz_const(d.tmpl)); },
                        // H = G∘G on [0,∞) only passes the mirror ray (slope -1) and then one tile.
                        [](const HalfLineTiled& h) { return lipschitz_const(h.inner.tmpl); },
                    },
                    m);
}

std::vector<Interval> fixed_points_line(const TiledLineMap& m, const Interval& w_in) {
  const auto clipped = line_domain(m).clip(w_in);
  if (!clipped) return {};
  const Interval w = *clipped;
  auto on_window = [&](const Interval& part) -> std::vector<Interval> {
    if (part.is_point()) {
      if (eval_line(m, part.lo) == part.lo) return {part};
      return {};
    }
    return fixed_points(restrict_window(m, part));
  };
  return std::visit(
      overloaded{
          [&](const MirrorTranslationTiled&) {
            // x ↦ -x has no fixed point on (0,∞).
            if (w.lo > 0) return std::vector<Interval>{};
            return on_window(Interval(w.lo, min(w.hi, Rational(0))));
          },
          [&](const DyadicMirrorTiled&) {
            if (w.lo > 0) return std::vector<Interval>{};
            const Rational b = min(w.hi, Rational(0));
            if (b < 0 || w.lo == 0) return on_window(Interval(w.lo, b));
            // Window reaches 0: fixed points on I_k are 2^-k times those on I_0.
            if (!on_window(Interval(-1, Rational(-1, 2))).empty()) {
              throw Error(ErrorCode::AccumulationPoint, "fixed points accumulate at 0");
            }
            return std::vector<Interval>{Interval::point(0)};
          },
          [&](const HalfLineTiled&) {
            if (w.lo > 0) return on_window(w);
            if (w.hi == 0) return on_window(w);
            if (!on_window(Interval(Rational(1, 2), 1)).empty()) {
              throw Error(ErrorCode::AccumulationPoint, "fixed points accumulate at 0");
            }
            return std::vector<Interval>{Interval::point(0)};
          },
      },
      m);
}

Domain line_domain(const TiledLineMap& m) {
  if (std::holds_alternative<HalfLineTiled>(m)) return Domain::half_line(0);
  return Domain::real_line();
}

// ---------------------------------------------------------------------------

LineDynamics::LineDynamics(TiledLineMap map, std::string id) : map_(std::move(map)), id_(std::move(id)) {}

std::vector<Rational> LineDynamics::accumulation_points() const {
  if (std::holds_alternative<MirrorTranslationTiled>(map_)) return {};
  return {Rational(0)};
}

// ---------------------------------------------------------------------------

DyadicCompactification::DyadicCompactification(MirrorTranslationTiled line_map)
    : line_map_(std::move(line_map)), template_min_(range(line_map_.tmpl).lo) {
  // Tile [n, n+1] must land at distance ~|n| so that fbar extends continuously
  // to 0 and 1: the image of a negative tile is the unit image lifted by -n-1,
  // the image of a positive tile is [-n-1, -n].
  const Interval unit = range(line_map_.tmpl);
  for (long n = -20; n <= 20; ++n) {
    const Interval tile(Rational(n), Rational(n + 1));
    const Interval img = translation_image(line_map_, tile);
    const Interval expected = n >= 0 ? Interval(Rational(-n - 1), Rational(-n))
                                     : Interval(unit.lo - n - 1, unit.hi - n - 1);
    if (img != expected) {
      throw Error(ErrorCode::InvariantViolated, "tile " + std::to_string(n) + " image " + to_string(img) +
                                                    " breaks the translation structure");
    }
  }
}

Rational DyadicCompactification::h(const Rational& x) {
  if (x == 0) return Rational(1, 2);
  if (x > 0) return 1 - h(Rational(-x));
  const Integer n = floor(x);
  const long m = -to_long(n);
  return pow2(-m - 1) * (1 + x + m);
}

Rational DyadicCompactification::h_inverse(const Rational& y) {
  if (y <= 0 || y >= 1) throw Error(ErrorCode::OutOfDomain, "h_inverse at " + to_string(y));
  if (y > Rational(1, 2)) return -h_inverse(Rational(1 - y));
  const long m = -floor_log2(y) - 1;
  return -m + y * pow2(m + 1) - 1;
}

Rational DyadicCompactification::eval(const Rational& y) const {
  if (y < 0 || y > 1) throw Error(ErrorCode::OutOfDomain, "fbar at " + to_string(y));
  if (y == 0) return 1;
  if (y == 1) return 0;
  return h(translation_eval(line_map_, h_inverse(y)));
}

Interval DyadicCompactification::image(const Interval& k) const {
  if (k.lo < 0 || k.hi > 1) throw Error(ErrorCode::OutOfDomain, "fbar image of " + to_string(k));
  if (k.is_point()) return Interval::point(eval(k.lo));
  std::vector<Interval> parts;
  Rational mid_lo, mid_hi;
  bool has_mid = true;
  if (k.lo == 0) {
    // F((-∞, N]) = [-N + min tmpl, ∞) for an integer N ≤ 0.
    const Integer bound = k.hi < 1 ? std::min(Integer(0), floor(h_inverse(k.hi))) : Integer(0);
    const Rational n(bound);
    parts.emplace_back(h(Rational(-n + template_min_)), Rational(1));
    mid_lo = n;
    if (k.hi == 1) has_mid = false;
  } else {
    mid_lo = h_inverse(k.lo);
  }
  if (k.hi == 1) {
    // F([N, ∞)) = (-∞, -N] for an integer N ≥ 0.
    const Integer bound = std::max(Integer(0), ceil(mid_lo));
    const Rational n(bound);
    parts.emplace_back(Rational(0), h(Rational(-n)));
    mid_hi = n;
  } else {
    mid_hi = h_inverse(k.hi);
  }
  if (has_mid && mid_lo <= mid_hi) {
    const Interval img = translation_image(line_map_, Interval(mid_lo, mid_hi));
    parts.emplace_back(h(img.lo), h(img.hi));
  }
  Interval out = parts.front();
  for (const auto& p : parts) out = hull(out, p);
  return out;
}

PLMap DyadicCompactification::restrict(const Interval& w) const {
  if (w.lo <= 0 || w.hi >= 1) {
    throw Error(ErrorCode::AccumulationPoint, "fbar window " + to_string(w) + " reaches an endpoint of [0,1]");
  }
  if (w.is_point()) throw Error(ErrorCode::InvalidArgument, "cannot restrict to a single point");
  const Interval x_window(h_inverse(w.lo), h_inverse(w.hi));
  const PLMap line = restrict_window(TiledLineMap{line_map_}, x_window);
  // fbar breaks where F breaks, where h⁻¹ breaks (integers) and where F
  // crosses an integer (h breaks there).
  std::vector<Rational> xs;
  for (const auto& n : line.nodes()) xs.push_back(n.x);
  for (Integer n = ceil(x_window.lo); n <= floor(x_window.hi); ++n) xs.emplace_back(n);
  const Interval img = range(line);
  for (Integer n = ceil(img.lo); n <= floor(img.hi); ++n) {
    for (const auto& s : solve_eq(line, Rational(n))) {
      xs.push_back(s.lo);
      xs.push_back(s.hi);
    }
  }
  xs = sorted_unique(std::move(xs));
  std::vector<Node> nodes;
  nodes.reserve(xs.size());
  for (const auto& x : xs) nodes.push_back({h(x), h(tranent::eval(line, x))});
  return PLMap(std::move(nodes)).simplified();
}

PLMap DyadicCompactification::truncated(int tiles) const {
  const PLMap core = restrict(Interval(h(Rational(-tiles)), h(Rational(tiles))));
  std::vector<Node> nodes;
  nodes.push_back({Rational(0), Rational(1)});
  nodes.insert(nodes.end(), core.nodes().begin(), core.nodes().end());
  nodes.push_back({Rational(1), Rational(0)});
  return PLMap(std::move(nodes));
}

DyadicCompactification compactify(const MirrorTranslationTiled& m) {
  check_unit_template(m.tmpl, "compactified");
  return DyadicCompactification(m);
}

CompactifiedDynamics::CompactifiedDynamics(DyadicCompactification c, std::string id)
    : c_(std::move(c)), id_(std::move(id)) {}

}  // namespace tranent
