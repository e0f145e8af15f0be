#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tranent/dynamics.hpp"
#include "tranent/interval.hpp"
#include "tranent/plmap.hpp"

namespace tranent {

/// x ↦ -x on (0,∞); on (-∞,0] the template repeated on unit tiles, each copy
/// lifted so that tile [n, n+1] maps near [-n-1, -n]:
///   x ↦ tmpl(x - ⌊x⌋) - ⌊x⌋ - 1.
/// The template lives on [0,1] with tmpl(0) = 1 and tmpl(1) = 0.
struct MirrorTranslationTiled {
  explicit MirrorTranslationTiled(PLMap tmpl);
  PLMap tmpl;
};

/// x ↦ -x on (0,∞), 0 ↦ 0, and on each I_k = [-2^-k, -2^(-k-1)] the template
/// carried onto the mirror tile [2^(-k-1), 2^-k] by orientation-preserving
/// affine maps: x ↦ 2^(-k-1) (1 + tmpl(2^(k+1) x + 2)).
/// Satisfies map(x/2) = map(x)/2 for x < 0.
struct DyadicMirrorTiled {
  explicit DyadicMirrorTiled(PLMap tmpl);
  PLMap tmpl;
};

/// Second iterate of a dyadic map restricted to [0,∞).
struct HalfLineTiled {
  DyadicMirrorTiled inner;
};

using TiledLineMap = std::variant<MirrorTranslationTiled, DyadicMirrorTiled, HalfLineTiled>;

Rational eval_line(const TiledLineMap& m, const Rational& x);

/// Exact PLMap on w with every tile breakpoint inside w kept as a node.
/// Throws AccumulationPoint when w reaches the dyadic accumulation point 0
/// from the tiled side.
PLMap restrict_window(const TiledLineMap& m, const Interval& w);

/// Exact m^n(k).
Interval image_interval(const TiledLineMap& m, const Interval& k, int n);

Rational global_lipschitz(const TiledLineMap& m);

std::vector<Interval> fixed_points_line(const TiledLineMap& m, const Interval& w);

Domain line_domain(const TiledLineMap& m);

class LineDynamics final : public Dynamics {
public:
  LineDynamics(TiledLineMap map, std::string id);

  const TiledLineMap& map() const { return map_; }
  std::string id() const override { return id_; }
  Domain domain() const override { return line_domain(map_); }
  Rational eval(const Rational& x) const override { return eval_line(map_, x); }
  Interval image(const Interval& k) const override { return image_interval(map_, k, 1); }
  PLMap restrict(const Interval& w) const override { return restrict_window(map_, w); }
  std::vector<Rational> accumulation_points() const override;
  std::vector<Interval> fixed_points(const Interval& w) const override { return fixed_points_line(map_, w); }

private:
  TiledLineMap map_;
  std::string id_;
};

/// Conjugacy of a translation-tiled line map to a map of [0,1] through the
/// dyadic homeomorphism h: ℝ → (0,1), affine on each [n, n+1] with
/// h(-m) = 2^(-m-1) and h(m) = 1 - 2^(-m-1) for m ≥ 0. The conjugate
/// fbar = h ∘ F ∘ h⁻¹ extends to [0,1] with fbar(0) = 1 and fbar(1) = 0.
class DyadicCompactification {
public:
  explicit DyadicCompactification(MirrorTranslationTiled line_map);

  const MirrorTranslationTiled& line_map() const { return line_map_; }

  static Rational h(const Rational& x);
  /// Inverse of h on (0,1).
  static Rational h_inverse(const Rational& y);

  Rational eval(const Rational& y) const;
  Interval image(const Interval& k) const;
  /// Exact PL form on a window strictly inside (0,1).
  PLMap restrict(const Interval& w) const;
  /// PL map on [0,1] equal to fbar on [h(-tiles), h(tiles)] and affine on the
  /// two end tiles; for searches whose orbits stay in the exact region.
  PLMap truncated(int tiles) const;

private:
  MirrorTranslationTiled line_map_;
  Rational template_min_;
};

DyadicCompactification compactify(const MirrorTranslationTiled& m);

class CompactifiedDynamics final : public Dynamics {
public:
  CompactifiedDynamics(DyadicCompactification c, std::string id);

  const DyadicCompactification& compactification() const { return c_; }
  std::string id() const override { return id_; }
  Domain domain() const override { return Domain::compact(Interval(0, 1)); }
  Rational eval(const Rational& y) const override { return c_.eval(y); }
  Interval image(const Interval& k) const override { return c_.image(k); }
  PLMap restrict(const Interval& w) const override { return c_.restrict(w); }
  std::vector<Rational> accumulation_points() const override { return {Rational(0), Rational(1)}; }

private:
  DyadicCompactification c_;
  std::string id_;
};

}  // namespace tranent
