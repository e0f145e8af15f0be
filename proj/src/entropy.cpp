#include "tranent/entropy.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "tranent/error.hpp"

namespace tranent {

namespace {

constexpr int kMaxRounds = 10000;
constexpr std::size_t kMaxNodes = 1000000;

void require_self_map(const PLMap& m) {
  if (!m.domain().contains(range(m))) {
    throw Error(ErrorCode::SelfMapRequired,
                "range " + to_string(range(m)) + " leaves the domain " + to_string(m.domain()));
  }
}

void require_square(const IntMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw Error(ErrorCode::InvalidArgument, "matrix must be square");
    for (const auto& x : row) {
      if (x < 0) throw Error(ErrorCode::InvalidArgument, "matrix entries must be nonnegative");
    }
  }
}

// Strongly connected components (Tarjan), each listed in index order.
std::vector<std::vector<std::size_t>> components(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  int counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (m[v][w] == 0) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_edge_within(const IntMatrix& m, const std::vector<std::size_t>& comp) {
  for (auto i : comp) {
    for (auto j : comp) {
      if (m[i][j] != 0) return true;
    }
  }
  return false;
}

// Collatz-Wielandt bounds min/max (Bv)_i / v_i on one irreducible class.
std::pair<Rational, Rational> cw_bounds(const IntMatrix& b, const std::vector<Integer>& v) {
  std::optional<Rational> lo, hi;
  for (std::size_t i = 0; i < b.size(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < b.size(); ++j) s += b[i][j] * v[j];
    Rational r(s, v[i]);
    r.canonicalize();
    if (!lo || r < *lo) lo = r;
    if (!hi || r > *hi) hi = r;
  }
  return {*lo, *hi};
}

std::pair<Rational, Rational> class_root(const IntMatrix& b, const Rational& tol, int& rounds) {
  const std::size_t n = b.size();
  std::vector<Integer> v(n, Integer(1));
  const Integer cap = Integer(1) << 200;
  for (int round = 0; round <= kMaxRounds; ++round) {
    auto [lo, hi] = cw_bounds(b, v);
    rounds = std::max(rounds, round);
    if (hi - lo <= tol) return {lo, hi};
    // v <- (B + I) v, which is primitive on an irreducible class.
    std::vector<Integer> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      Integer s = v[i];
      for (std::size_t j = 0; j < n; ++j) s += b[i][j] * v[j];
      next[i] = s;
    }
    Integer biggest = *std::max_element(next.begin(), next.end());
    if (biggest > cap) {
      const auto shift = mpz_sizeinbase(biggest.get_mpz_t(), 2) - 64;
      for (auto& x : next) {
        Integer q;
        mpz_cdiv_q_2exp(q.get_mpz_t(), x.get_mpz_t(), shift);
        x = q;
      }
    }
    v = std::move(next);
  }
  throw Error(ErrorCode::ToleranceNotReached, "no enclosure within tolerance after " + std::to_string(kMaxRounds) +
                                                  " rounds");
}

// log(q)/d rounded in the given direction.
double log_ratio(const Rational& q, int d, mpfr_rnd_t rnd) {
  if (q == 1) return 0;
  mpfr_t x;
  mpfr_init2(x, 256);
  mpfr_set_q(x, q.get_mpq_t(), rnd);
  mpfr_log(x, x, rnd);
  mpfr_div_si(x, x, d, rnd);
  const double out = mpfr_get_d(x, rnd);
  mpfr_clear(x);
  return out;
}

LogBound horseshoe_bound(const QuasiHorseshoe& h, const std::string& origin) {
  return LogBound{Rational(static_cast<unsigned long>(h.s())), h.iterate,
                  origin + " " + std::to_string(h.s()) + "-horseshoe for " + h.map_id + "^" + std::to_string(h.iterate)};
}

}  // namespace

CoveringMatrix covering_matrix(const Dynamics& f, const std::vector<IntervalUnion>& pieces, int iterate) {
  CoveringMatrix out{pieces, IntMatrix(pieces.size(), std::vector<Integer>(pieces.size(), Integer(0))), iterate};
  std::vector<IntervalUnion> targets;
  for (const auto& p : pieces) targets.push_back(normalize(p));
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    IntervalUnion img;
    for (const auto& c : pieces[i]) img.push_back(f.image_n(c, iterate));
    img = normalize(std::move(img));
    for (std::size_t j = 0; j < pieces.size(); ++j) out.entries[i][j] = covers(img, targets[j]) ? 1 : 0;
  }
  return out;
}

RootEnclosure perron_root(const IntMatrix& m, double tol) {
  require_square(m);
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const Rational tol_q = from_double(tol);
  RootEnclosure out{Rational(0), Rational(0)};
  for (const auto& comp : components(m)) {
    if (!has_edge_within(m, comp)) continue;
    IntMatrix b(comp.size(), std::vector<Integer>(comp.size()));
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = 0; j < comp.size(); ++j) b[i][j] = m[comp[i]][comp[j]];
    }
    auto [lo, hi] = class_root(b, tol_q, out.rounds);
    out.lo = max(out.lo, lo);
    out.hi = max(out.hi, hi);
  }
  out.lo_float = to_double_down(out.lo);
  out.hi_float = to_double_up(out.hi);
  return out;
}

std::optional<std::vector<Rational>> markov_partition(const PLMap& m, int max_steps) {
  require_self_map(m);
  std::vector<Rational> points;
  for (const auto& n : m.nodes()) points.push_back(n.x);
  std::vector<Rational> frontier = points;
  for (int step = 0; step < max_steps; ++step) {
    std::vector<Rational> fresh;
    for (const auto& x : frontier) {
      Rational y = eval(m, x);
      if (!std::binary_search(points.begin(), points.end(), y) &&
          std::find(fresh.begin(), fresh.end(), y) == fresh.end()) {
        fresh.push_back(std::move(y));
      }
    }
    if (fresh.empty()) return points;
    points.insert(points.end(), fresh.begin(), fresh.end());
    std::sort(points.begin(), points.end());
    frontier = std::move(fresh);
  }
  return std::nullopt;
}

IntMatrix markov_matrix(const PLMap& m, const std::vector<Rational>& partition) {
  const std::size_t n = partition.size() - 1;
  IntMatrix out(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    const Interval img = range_on(m, Interval(partition[i], partition[i + 1]));
    for (std::size_t j = 0; j < n; ++j) {
      out[i][j] = img.contains(Interval(partition[j], partition[j + 1])) ? 1 : 0;
    }
  }
  return out;
}

std::vector<LapEntry> lap_entropy_sequence(const PLMap& m, int n_max) {
  require_self_map(m);
  std::vector<LapEntry> out;
  PLMap g = m;
  for (int n = 1; n <= n_max; ++n) {
    const std::size_t laps = lap_count(g);
    out.push_back({n, laps, std::log(static_cast<double>(laps)) / n});
    if (n == n_max) break;
    g = compose(m, g);
    if (g.nodes().size() > kMaxNodes) {
      throw Error(ErrorCode::PieceExplosion, "iterate " + std::to_string(n + 1) + " needs " +
                                                 std::to_string(g.nodes().size()) + " nodes");
    }
  }
  return out;
}

std::string_view to_string(MixingClass k) {
  switch (k) {
    case MixingClass::Primitive: return "primitive";
    case MixingClass::IrreduciblePeriodic: return "irreducible-periodic";
    case MixingClass::Reducible: return "reducible";
  }
  return "reducible";
}

MixingVerdict mixing_matrix_check(const IntMatrix& m) {
  require_square(m);
  const auto comps = components(m);
  if (comps.size() != 1 || !has_edge_within(m, comps.front())) return {MixingClass::Reducible, 0};
  // Period = gcd over edges u -> v of level(u) + 1 - level(v), BFS levels from 0.
  const std::size_t n = m.size();
  std::vector<long> level(n, -1);
  std::vector<std::size_t> queue{0};
  level[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto u = queue[head];
    for (std::size_t v = 0; v < n; ++v) {
      if (m[u][v] != 0 && level[v] < 0) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  long period = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (m[u][v] != 0) period = std::gcd(period, std::labs(level[u] + 1 - level[v]));
    }
  }
  if (period == 1) return {MixingClass::Primitive, 1};
  return {MixingClass::IrreduciblePeriodic, static_cast<int>(period)};
}

std::string LogBound::symbolic() const {
  if (argument == 1) return "0";
  std::string s = "log(" + to_string(argument) + ")";
  if (divisor != 1) s += "/" + std::to_string(divisor);
  return s;
}

double LogBound::lower_float() const { return log_ratio(argument, divisor, MPFR_RNDD); }

double LogBound::upper_float() const { return log_ratio(argument, divisor, MPFR_RNDU); }

LogComparison compare_logs(const LogBound& a, const LogBound& b) {
  const int g = std::gcd(a.divisor, b.divisor);
  const Rational lhs = pow(a.argument, static_cast<unsigned long>(b.divisor / g));
  const Rational rhs = pow(b.argument, static_cast<unsigned long>(a.divisor / g));
  LogComparison out;
  out.lhs = lhs.get_num() * rhs.get_den();
  out.rhs = rhs.get_num() * lhs.get_den();
  out.sign = out.lhs < out.rhs ? -1 : (out.lhs > out.rhs ? 1 : 0);
  return out;
}

EntropyBounds cr_bounds(const Dynamics& f, const std::vector<QuasiHorseshoe>& certificates,
                        const LipschitzBound& lipschitz, const std::vector<QuasiHorseshoe>& amplified) {
  if (lipschitz.iterate < 1 || lipschitz.constant < 0) {
    throw Error(ErrorCode::InvalidArgument, "Lipschitz bound needs a positive iterate and nonnegative constant");
  }
  EntropyBounds out;
  out.lower = LogBound{Rational(1), 1, "no certificate"};
  auto consider = [&](const QuasiHorseshoe& h, const std::string& origin, bool strict) {
    const Verdict v = verify(h, f);
    if (!v.ok) throw Error(ErrorCode::UncertifiedInput, h.map_id + " certificate fails: " + v.reason);
    const LogBound b = horseshoe_bound(h, origin);
    if (compare_logs(b, out.lower).sign > 0) {
      out.lower = b;
      out.lower_strict = strict;
    }
  };
  for (const auto& h : certificates) consider(h, "verified", false);
  for (const auto& h : amplified) consider(h, "amplified", true);
  const bool expanding = lipschitz.constant > 1;
  out.upper = LogBound{expanding ? lipschitz.constant : Rational(1), expanding ? lipschitz.iterate : 1,
                       "Lipschitz constant " + to_string(lipschitz.constant) + " of " + f.id() + "^" +
                           std::to_string(lipschitz.iterate)};
  out.lower_vs_upper = compare_logs(out.lower, out.upper);
  return out;
}

}  // namespace tranent
