#include "doctest.h"
#include "support.hpp"
#include "tranent/error.hpp"
#include "tranent/families.hpp"
#include "tranent/specification.hpp"

using namespace tranent;
using namespace testing_support;

namespace {

const FamilyParams& params() {
  static const FamilyParams p = FamilyParams::make(Q("16/5"));
  return p;
}

bool has_point(const std::vector<Interval>& sols, const Rational& x) {
  for (const auto& s : sols) {
    if (s.contains(x)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("periodic points") {
  const LineDynamics F(make_F(params()), "F");
  const auto two = periodic_points(F, 2, I("-10", "10"));
  CHECK(has_point(two, 0));
  for (int n = 1; n <= 10; ++n) {
    CHECK(has_point(two, Rational(n)));
    CHECK(has_point(two, Rational(-n)));
  }
  CHECK(periodic_points(F, 1, I("-10", "10")) == std::vector<Interval>{Interval::point(0)});
  const PLDynamics t(tent(), "tent");
  CHECK(periodic_points(t, 2, I("0", "1")) ==
        std::vector<Interval>{Interval::point(0), Interval::point(Q("2/5")), Interval::point(Q("2/3")),
                              Interval::point(Q("4/5"))});
  const LineDynamics G(make_G(params()), "G");
  try {
    periodic_points(G, 2, I("-1", "1"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AccumulationPoint);
  }
}

TEST_CASE("travel times for F") {
  const LineDynamics F(make_F(params()), "F");
  const auto cert = travel_time_table(F, Q("1/2"), 2, 8);
  REQUIRE(cert.table.size() == 7);
  for (const auto& e : cert.table) {
    REQUIRE(e.steps);
    CHECK(*e.steps >= e.n - 1);
    CHECK(*e.steps >= e.lower_bound);
    CHECK(*e.steps == 8 * e.n - 1);  // regression value
  }
  for (std::size_t i = 1; i < cert.table.size(); ++i) CHECK(*cert.table[i].steps >= *cert.table[i - 1].steps);
  REQUIRE(cert.displacement.size() == 16);
  for (const auto& d : cert.displacement) CHECK(d.holds);
  CHECK(cert.displacement.front().image == I("-1", "65/64"));
  CHECK_FALSE(cert.obstructed.empty());
  const auto v = refute_specification(F, Q("1/2"));
  CHECK(v.refuted);
}

TEST_CASE("travel times for H and the compact conjugate") {
  const LineDynamics H(make_H(params()), "H");
  const auto vh = refute_specification(H, Q("1/2"), 1, 6);
  CHECK(vh.refuted);
  std::vector<int> times;
  for (const auto& e : vh.evidence.table) times.push_back(*e.steps);
  CHECK(times == std::vector<int>{8, 12, 17, 21, 25, 29});

  const CompactifiedDynamics fbar(make_fbar(params()), "fbar");
  const auto vf = refute_specification(fbar, Q("1/2"));
  CHECK_FALSE(vf.refuted);
  for (const auto& e : vf.evidence.table) CHECK(*e.steps == 0);
}

TEST_CASE("obstructed instances cannot be traced") {
  const LineDynamics F(make_F(params()), "F");
  const auto cert = travel_time_table(F, Q("1/2"), 2, 4);
  for (const auto& inst : cert.obstructed) {
    inst.validate();
    // The whole eps-ball around 0 fails at the later window.
    CHECK_FALSE(traces(F, inst, cert.source));
    const Interval later = F.image_n(cert.source, inst.targets.back().first);
    const Rational c = F.eval_n(inst.targets.back().y, inst.targets.back().first);
    CHECK_FALSE((later.lo < c + inst.eps && later.hi > c - inst.eps));
  }
}

TEST_CASE("trace search") {
  const PLDynamics t(tent(), "tent");
  SpecInstance self{{{Q("2/3"), 0, 3}}, Q("1/10"), 0};
  const auto r = trace_search(t, self, 6);
  REQUIRE(r.interval);
  CHECK(r.interval->contains(Q("2/3")));
  CHECK(traces(t, self, *r.interval));

  const PLDynamics swap(pl({{"0", "1"}, {"1", "0"}}), "swap");
  SpecInstance parity{{{Q("1/4"), 0, 0}, {Q("3/4"), 1, 1}}, Q("1/100"), 1};
  CHECK_FALSE(trace_search(swap, parity, 4).interval);

  const auto c = make_fbar(params());
  const PLDynamics truncated(c.truncated(6), "fbar-6");
  const CompactifiedDynamics exact(c, "fbar");
  SpecInstance far{{{Q("1/2"), 0, 2}, {Q("15/16"), 14, 16}}, Q("1/10"), 12};
  const auto found = trace_search(truncated, far, 20, &exact);
  CHECK_FALSE(found.capped);
  REQUIRE(found.interval);
  CHECK(traces(exact, far, *found.interval));
}

TEST_CASE("property: returned tracing intervals re-verify") {
  const PLDynamics t(tent3(), "tent3");
  Sampler s(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational y1 = s.in(I("0", "1"), 50);
    const Rational y2 = s.in(I("0", "1"), 50);
    const int k1 = s.integer(0, 2);
    const int j2 = k1 + s.integer(1, 3);
    SpecInstance inst{{{y1, 0, k1}, {y2, j2, j2 + s.integer(0, 2)}}, Q("1/20"), 1};
    const auto r = trace_search(t, inst, 10);
    if (r.interval) CHECK(traces(t, inst, *r.interval));
  }
}
