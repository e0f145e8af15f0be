#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "tranent/error.hpp"
#include "tranent/families.hpp"

using namespace tranent;
using namespace testing_support;

namespace {

bool throws_code(ErrorCode code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

PLMap phi() { return make_phi(FamilyParams::make(Q("16/5"))); }
PLMap psi() { return make_psi(FamilyParams::make(Q("16/5"))); }

}  // namespace

TEST_CASE("rational parsing is strict and canonical") {
  CHECK(Q("6/4") == Rational(3, 2));
  CHECK(to_string(Q("-10/5")) == "-2");
  CHECK(to_string(Q("21/64")) == "21/64");
  CHECK(throws_code(ErrorCode::ParseError, [] { Q("1/0"); }));
  CHECK(throws_code(ErrorCode::ParseError, [] { Q("0.5"); }));
  CHECK(throws_code(ErrorCode::ParseError, [] { Q("1/-2"); }));
  CHECK(throws_code(ErrorCode::ParseError, [] { Q(""); }));
  CHECK(floor_log2(Q("3/8")) == -2);
  CHECK(floor_log2(Q("1/4")) == -2);
  CHECK(floor_log2(Q("5")) == 2);
  CHECK(pow2(-3) == Q("1/8"));
  CHECK(pow(Q("16/5"), 2) == Q("256/25"));
}

TEST_CASE("double brackets enclose the rational") {
  for (const char* s : {"1/3", "-2/7", "16/5", "0", "1/1024"}) {
    const Rational q = Q(s);
    CHECK(from_double(to_double_down(q)) <= q);
    CHECK(q <= from_double(to_double_up(q)));
  }
}

TEST_CASE("eval examples") {
  CHECK(eval(phi(), 0) == 1);
  CHECK(eval(phi(), Q("43/64")) == Q("65/64"));
  CHECK(eval(tent(), Q("1/2")) == 1);
  CHECK(throws_code(ErrorCode::OutOfDomain, [] { eval(tent(), Q("3/2")); }));
}

TEST_CASE("compose examples") {
  const PLMap tt = compose(tent(), tent());
  std::vector<Rational> xs;
  for (const auto& n : tt.nodes()) xs.push_back(n.x);
  CHECK(xs == std::vector<Rational>{0, Q("1/4"), Q("1/2"), Q("3/4"), 1});
  CHECK(lap_count(tt) == 4);
  CHECK(throws_code(ErrorCode::DomainExceeded, [] { compose(phi(), phi()); }));
  const PLMap f = tent3();
  CHECK(compose(PLMap::identity(Interval(0, 1)), f) == f);
}

TEST_CASE("range and fixed points") {
  CHECK(range(phi()) == I("-1/64", "65/64"));
  CHECK(range(psi()) == I("-1/20", "21/20"));
  CHECK(range_on(tent(), I("0", "1/4")) == I("0", "1/2"));
  CHECK(fixed_points(tent()) == std::vector<Interval>{Interval::point(0), Interval::point(Q("2/3"))});
  CHECK(lipschitz_const(phi()) == Q("16/5"));
  CHECK(lipschitz_const(psi()) == Q("16/5"));
  CHECK(lipschitz_const(tent()) == 2);
  CHECK(lap_count(phi()) == 3);
}

TEST_CASE("solve_eq reports flat pieces as intervals") {
  const PLMap m = pl({{"0", "0"}, {"1", "1"}, {"2", "1"}, {"3", "0"}});
  CHECK(solve_eq(m, 1) == std::vector<Interval>{I("1", "2")});
  CHECK(solve_eq(m, Q("1/2")) == std::vector<Interval>{Interval::point(Q("1/2")), Interval::point(Q("5/2"))});
  CHECK(solve_eq(m, 5).empty());
}

TEST_CASE("property: composition, ranges, solving") {
  Sampler s;
  for (int trial = 0; trial < 100; ++trial) {
    const PLMap g = s.plmap(Interval(0, 1), s.integer(1, 6));
    const Interval rg = range(g);
    const PLMap f = s.plmap(Interval(rg.lo - 1, rg.hi + 1), s.integer(1, 6));
    const PLMap fg = compose(f, g);
    for (int k = 0; k < 5; ++k) {
      const Rational x = s.in(Interval(0, 1));
      CHECK(eval(fg, x) == eval(f, eval(g, x)));
      CHECK(rg.contains(eval(g, x)));
    }
    CHECK(lap_count(fg) <= lap_count(f) * lap_count(g));
    CHECK(lipschitz_const(fg) <= lipschitz_const(f) * lipschitz_const(g));

    // Range endpoints are attained at nodes.
    bool lo_hit = false, hi_hit = false;
    for (const auto& n : g.nodes()) {
      lo_hit = lo_hit || n.y == rg.lo;
      hi_hit = hi_hit || n.y == rg.hi;
    }
    CHECK(lo_hit);
    CHECK(hi_hit);

    const Rational c = s.in(rg);
    const auto sols = solve_eq(g, c);
    for (const auto& p : sols) {
      CHECK(eval(g, p.lo) == c);
      CHECK(eval(g, p.hi) == c);
    }
    // Constant sign strictly between consecutive solutions.
    std::vector<Rational> cuts{Rational(0)};
    for (const auto& p : sols) {
      cuts.push_back(p.lo);
      cuts.push_back(p.hi);
    }
    cuts.push_back(Rational(1));
    for (std::size_t i = 0; i + 1 < cuts.size(); i += 2) {
      if (!(cuts[i] < cuts[i + 1])) continue;
      const int sg = sgn(Rational(eval(g, (cuts[i] + cuts[i + 1]) / 2) - c));
      const int sg2 = sgn(Rational(eval(g, cuts[i] + (cuts[i + 1] - cuts[i]) / 7) - c));
      CHECK(sg != 0);
      CHECK(sg == sg2);
    }
    CHECK(fixed_points(g) == solve_eq(minus_identity(g), 0));
  }
}
