#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tranent/dynamics.hpp"
#include "tranent/linemap.hpp"

namespace tranent {

/// Orbit segment of y over the times [first, last].
struct SpecTarget {
  Rational y;
  int first = 0;
  int last = 0;
};

/// Targets with 0 = first_1 <= last_1 < first_2 <= ... and tracing radius eps.
struct SpecInstance {
  std::vector<SpecTarget> targets;
  Rational eps;
  int gap = 0;  // required first_{l+1} - last_l

  /// Throws InvalidArgument when the windows are unordered or eps <= 0.
  void validate() const;
};

/// f^period(x) = x on w; components where orbits leave a compact domain are
/// skipped.
std::vector<Interval> periodic_points(const Dynamics& f, int period, const Interval& w);

struct TravelEntry {
  int n = 0;
  Rational target;                 // a point of the periodic orbit being reached
  std::optional<int> steps;        // least m with f^m(source) meeting the eps-ball
  int lower_bound = 0;             // implied by the displacement checks
};

/// f(K_r) inside the allowed interval for the test radius r.
struct DisplacementCheck {
  Rational radius;
  Interval image;
  Interval allowed;
  bool holds = false;
};

struct RefutationCertificate {
  std::string map_id;
  std::string geometry;  // "line", "half-line" or "compact"
  Rational eps;
  Interval source;
  std::vector<TravelEntry> table;
  std::vector<DisplacementCheck> displacement;
  /// s = 2 instances with gap t(n) - 1 that no point can trace.
  std::vector<SpecInstance> obstructed;
};

struct SpecVerdict {
  bool refuted = false;
  std::string reason;
  RefutationCertificate evidence;
};

/// Exact travel times from the eps-ball around the fixed point 0 to the
/// eps-balls around the orbits reached at scale n, for n in [n_lo, n_hi].
/// Line maps aim at the period-2 orbit {n+1, -(n+1)}, the half-line map at
/// the fixed point 2^n, a compactified map at h(n+1) and h(-(n+1)).
RefutationCertificate travel_time_table(const Dynamics& f, const Rational& eps, int n_lo, int n_hi);

/// Certificate when travel times grow without a uniform bound over the
/// tested range and the displacement checks confirm the growth.
SpecVerdict refute_specification(const Dynamics& f, const Rational& eps, int n_lo = 2, int n_hi = 8);

struct TraceResult {
  std::optional<Interval> interval;
  bool capped = false;
  std::size_t pieces_explored = 0;
};

/// Searches the cylinders of f (a compact-domain map) for an interval of
/// points that eps-trace every target segment. When `exact` is given the
/// interval is re-verified against it with exact interval images.
TraceResult trace_search(const Dynamics& f, const SpecInstance& inst, int depth, const Dynamics* exact = nullptr,
                         std::size_t budget = 2000000);

/// Every point of y eps-traces every target segment (strict inequalities).
bool traces(const Dynamics& f, const SpecInstance& inst, const Interval& y);

}  // namespace tranent
