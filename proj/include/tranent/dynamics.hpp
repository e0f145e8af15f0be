#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tranent/interval.hpp"
#include "tranent/plmap.hpp"

namespace tranent {

/// Possibly unbounded domain of a map; a missing end means ±∞.
struct Domain {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static Domain real_line() { return {}; }
  static Domain half_line(const Rational& from) { return {from, std::nullopt}; }
  static Domain compact(const Interval& i) { return {i.lo, i.hi}; }

  bool contains(const Rational& x) const { return (!lo || *lo <= x) && (!hi || x <= *hi); }
  bool contains(const Interval& i) const { return contains(i.lo) && contains(i.hi); }
  /// Clips a window to the domain; nullopt if they do not meet.
  std::optional<Interval> clip(const Interval& w) const;
};

/// Exact evaluator of a continuous map of a real interval into the line.
/// Everything the horseshoe, entropy and specification tooling needs is
/// phrased through this interface, so infinite-piece maps can answer with
/// structure-aware formulas instead of finite approximations.
class Dynamics {
public:
  virtual ~Dynamics() = default;

  virtual std::string id() const = 0;
  virtual Domain domain() const = 0;
  virtual Rational eval(const Rational& x) const = 0;
  /// Exact f(K) for a compact interval K inside the domain.
  virtual Interval image(const Interval& k) const = 0;
  /// Exact finite PL representation on a window; throws AccumulationPoint
  /// when the window would need infinitely many pieces.
  virtual PLMap restrict(const Interval& w) const = 0;
  /// Points where pieces accumulate (no finite restriction around them).
  virtual std::vector<Rational> accumulation_points() const { return {}; }

  virtual std::vector<Interval> fixed_points(const Interval& w) const;
  virtual std::vector<Interval> solve(const Rational& c, const Interval& w) const;

  Rational eval_n(Rational x, int n) const;
  Interval image_n(Interval k, int n) const;
};

using DynamicsPtr = std::shared_ptr<const Dynamics>;

/// Exact PL representation of f^n on w (composition of window restrictions).
PLMap restrict_iterate(const Dynamics& f, const Interval& w, int n);

/// Maximal nondegenerate sub-windows of m's domain on which m takes values in d.
std::vector<PLMap> split_inside(const PLMap& m, const Domain& d);

/// f^n on the parts of w whose first n-1 images stay in the domain of f,
/// one PLMap per maximal such interval.
std::vector<PLMap> partial_iterate(const Dynamics& f, const Interval& w, int n);

class PLDynamics final : public Dynamics {
public:
  PLDynamics(PLMap map, std::string id);

  const PLMap& map() const { return map_; }
  std::string id() const override { return id_; }
  Domain domain() const override { return Domain::compact(map_.domain()); }
  Rational eval(const Rational& x) const override;
  Interval image(const Interval& k) const override;
  PLMap restrict(const Interval& w) const override;

private:
  PLMap map_;
  std::string id_;
};

/// x ↦ -f(-x); turns the "f < x" cases of the finders into "f > x" ones.
class ReflectedDynamics final : public Dynamics {
public:
  explicit ReflectedDynamics(DynamicsPtr inner);

  std::string id() const override;
  Domain domain() const override;
  Rational eval(const Rational& x) const override;
  Interval image(const Interval& k) const override;
  PLMap restrict(const Interval& w) const override;
  std::vector<Rational> accumulation_points() const override;
  std::vector<Interval> fixed_points(const Interval& w) const override;
  std::vector<Interval> solve(const Rational& c, const Interval& w) const override;

private:
  DynamicsPtr inner_;
};

/// x ↦ f^power(x + shift) - shift on a sub-domain; the half-line system
/// f²|[z,∞) moved so that z sits at 0.
class ShiftedIterate final : public Dynamics {
public:
  ShiftedIterate(DynamicsPtr inner, int power, Rational shift, Domain domain);

  std::string id() const override;
  Domain domain() const override { return domain_; }
  Rational eval(const Rational& x) const override;
  Interval image(const Interval& k) const override;
  PLMap restrict(const Interval& w) const override;
  std::vector<Rational> accumulation_points() const override;

private:
  DynamicsPtr inner_;
  int power_;
  Rational shift_;
  Domain domain_;
};

/// Reflection of an interval through 0.
Interval negate(const Interval& i);
std::vector<Interval> negate(const std::vector<Interval>& parts);

}  // namespace tranent
