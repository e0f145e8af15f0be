#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tranent/dynamics.hpp"
#include "tranent/horseshoe.hpp"

namespace tranent {

using IntMatrix = std::vector<std::vector<Integer>>;

struct CoveringMatrix {
  std::vector<IntervalUnion> pieces;
  IntMatrix entries;
  int iterate = 1;
};

/// Entry (i, j) is 1 iff f^iterate(piece i) covers piece j.
CoveringMatrix covering_matrix(const Dynamics& f, const std::vector<IntervalUnion>& pieces, int iterate);

/// Rigorous enclosure of a spectral radius: exact rational bounds and the
/// doubles rounded outward from them.
struct RootEnclosure {
  Rational lo;
  Rational hi;
  double lo_float = 0;
  double hi_float = 0;
  int rounds = 0;
};

/// Spectral radius of a nonnegative integer matrix via Collatz-Wielandt
/// bounds of power iterates on each irreducible class. Throws
/// ToleranceNotReached after 10000 rounds.
RootEnclosure perron_root(const IntMatrix& m, double tol);

/// Forward-orbit closure of the nodes of a self-map, or nullopt if it has not
/// closed after max_steps rounds. Throws SelfMapRequired.
std::optional<std::vector<Rational>> markov_partition(const PLMap& m, int max_steps);

/// Transition matrix of a Markov partition: (i, j) = 1 iff the i-th partition
/// interval maps over the j-th.
IntMatrix markov_matrix(const PLMap& m, const std::vector<Rational>& partition);

struct LapEntry {
  int n = 0;
  std::size_t laps = 0;
  double rate = 0;  // log(laps) / n
};

/// Lap numbers of m, m^2, ..., m^n_max. Throws SelfMapRequired, or
/// PieceExplosion once an iterate needs more than 10^6 nodes.
std::vector<LapEntry> lap_entropy_sequence(const PLMap& m, int n_max);

enum class MixingClass { Primitive, IrreduciblePeriodic, Reducible };

struct MixingVerdict {
  MixingClass kind = MixingClass::Reducible;
  int period = 0;  // for irreducible matrices
};

std::string_view to_string(MixingClass k);

MixingVerdict mixing_matrix_check(const IntMatrix& m);

/// log(argument) / divisor, with a note on where it came from.
struct LogBound {
  Rational argument{1};
  int divisor = 1;
  std::string provenance;

  /// "log(3)/2", "log(16/5)", "0".
  std::string symbolic() const;
  /// Outward-rounded double enclosure.
  double lower_float() const;
  double upper_float() const;
};

/// Exact comparison of log(a.argument)/a.divisor with the same for b, by
/// comparing a.argument^(q) with b.argument^(p) after cancelling gcd(p, q)
/// and clearing denominators. lhs and rhs are the integers compared.
struct LogComparison {
  int sign = 0;  // -1: a < b, 0: equal, 1: a > b
  Integer lhs;
  Integer rhs;
};

LogComparison compare_logs(const LogBound& a, const LogBound& b);

struct LipschitzBound {
  Rational constant;
  int iterate = 1;  // constant bounds the slopes of f^iterate
};

struct EntropyBounds {
  LogBound lower;
  LogBound upper;
  /// True when the lower bound comes from an amplified certificate, which
  /// makes the inequality ent > (log s)/n of its source strict.
  bool lower_strict = false;
  LogComparison lower_vs_upper;
};

/// Sandwich for the entropy supremum over compact invariant sets. Every
/// certificate is re-verified against f (UncertifiedInput otherwise).
EntropyBounds cr_bounds(const Dynamics& f, const std::vector<QuasiHorseshoe>& certificates,
                        const LipschitzBound& lipschitz, const std::vector<QuasiHorseshoe>& amplified = {});

}  // namespace tranent
