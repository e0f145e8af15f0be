#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tranent/dynamics.hpp"
#include "tranent/interval.hpp"

namespace tranent {

enum class HorseshoeKind { Tight, Loose, Neither };

std::string_view to_string(HorseshoeKind k);

/// Base interval J with s >= 2 pieces (finite unions of compact intervals),
/// each of whose images under f^iterate covers J.
struct QuasiHorseshoe {
  Interval base;
  std::vector<IntervalUnion> pieces;
  int iterate = 1;
  std::string map_id;

  std::size_t s() const { return pieces.size(); }
  bool operator==(const QuasiHorseshoe&) const = default;
};

struct Verdict {
  bool ok = false;
  HorseshoeKind kind = HorseshoeKind::Neither;
  std::string reason;
  std::optional<Rational> witness;
};

/// Exact check of the structural, disjointness and covering conditions.
Verdict verify(const QuasiHorseshoe& h, const Dynamics& f);

/// Loosening found no proper sub-pieces: every piece is needed in full.
struct TightReport {
  QuasiHorseshoe certificate;
  std::string note;
};

/// Shrinks every piece to a minimal sub-piece whose image still covers the
/// base. Throws InvariantViolated if `h` does not verify.
std::variant<QuasiHorseshoe, TightReport> loosen(const QuasiHorseshoe& h, const Dynamics& f);

struct SwapStructure {
  Rational c;
  Interval left;   // window part below c, mapped above c
  Interval right;  // window part above c, mapped below c
  Interval left_image;
  Interval right_image;
};

struct BitransitiveEvidence {
  Rational c;
  Interval witness;  // lies on one side of c
  Interval image;    // crosses c
};

using DichotomyResult = std::variant<SwapStructure, BitransitiveEvidence>;

/// Unique fixed point test plus the swap/overflow dichotomy on a window.
/// Throws NotApplicable when the window does not hold exactly one fixed point.
DichotomyResult dichotomy(const Dynamics& f, const Interval& window);

/// Outcome of a constructive finder: the raw construction, the certificate
/// after loosening, and the named points of the construction.
struct FinderResult {
  std::string variant;
  QuasiHorseshoe raw;
  QuasiHorseshoe certificate;
  HorseshoeKind kind = HorseshoeKind::Neither;
  bool loosened = false;
  Interval window;
  std::vector<std::pair<std::string, Rational>> chain;
};

/// Expanding search windows [-2^j, 2^j] clipped to the domain.
struct WindowSchedule {
  int first = 3;
  int last = 12;
};

/// Fixed points on w; around accumulation points of fixed points the window
/// is punctured by (a - 2^-j, a + 2^-j).
std::vector<Interval> fixed_point_census(const Dynamics& f, const Interval& w, int j);

FinderResult find_two_fixed(const DynamicsPtr& f, WindowSchedule schedule = {});
FinderResult find_halfline(const DynamicsPtr& g, WindowSchedule schedule = {});
FinderResult find_unique_fixed(const DynamicsPtr& f, WindowSchedule schedule = {});

struct AmplifyResult {
  std::optional<QuasiHorseshoe> certificate;
  int depth = 0;             // n at which the certificate was found
  std::vector<std::size_t> crossings;  // covering crossings found for n = 2..
};

/// Bounded search for an (s^n + 1)-quasihorseshoe for f^(n * iterate).
/// Throws NotLoose unless `h` verifies as loose.
AmplifyResult amplify(const QuasiHorseshoe& h, const Dynamics& f, int n_max);

/// Minimal sub-intervals of w on which f^n crosses the whole of `base`, in
/// left-to-right order with disjoint interiors.
std::vector<Interval> covering_crossings(const Dynamics& f, const Interval& w, const Interval& base, int n);

}  // namespace tranent
