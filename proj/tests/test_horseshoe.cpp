#include "doctest.h"
#include "support.hpp"
#include "tranent/error.hpp"
#include "tranent/families.hpp"
#include "tranent/horseshoe.hpp"

using namespace tranent;
using namespace testing_support;

namespace {

const FamilyParams& params() {
  static const FamilyParams p = FamilyParams::make(Q("16/5"));
  return p;
}

DynamicsPtr pl_dyn(PLMap m, const char* id) { return std::make_shared<PLDynamics>(std::move(m), id); }
DynamicsPtr line_dyn(TiledLineMap m, const char* id) { return std::make_shared<LineDynamics>(std::move(m), id); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

std::vector<IntervalUnion> singles(std::initializer_list<Interval> parts) {
  std::vector<IntervalUnion> out;
  for (const auto& p : parts) out.push_back({p});
  return out;
}

QuasiHorseshoe psi_horseshoe() {
  const auto& p = params();
  return {Interval(0, 1), singles({Interval(0, p.q1), Interval(p.q1, p.q2), Interval(p.q2, 1)}), 1, "psi"};
}

}  // namespace

TEST_CASE("verify examples") {
  const auto psi = pl_dyn(make_psi(params()), "psi");
  const Verdict v = verify(psi_horseshoe(), *psi);
  CHECK(v.ok);
  CHECK(v.kind == HorseshoeKind::Neither);

  const auto tent_map = pl_dyn(tent(), "tent");
  const QuasiHorseshoe tight{Interval(0, 1), singles({I("0", "1/2"), I("1/2", "1")}), 1, "tent"};
  CHECK(verify(tight, *tent_map).ok);
  CHECK(verify(tight, *tent_map).kind == HorseshoeKind::Tight);

  const QuasiHorseshoe overlap{Interval(0, 1), singles({I("0", "1/2"), I("1/4", "1")}), 1, "tent"};
  const Verdict bad = verify(overlap, *tent_map);
  CHECK_FALSE(bad.ok);
  CHECK(bad.reason.find("[1/4, 1/2]") != std::string::npos);

  const QuasiHorseshoe short_image{Interval(0, 1), singles({I("0", "1/4"), I("1/2", "1")}), 1, "tent"};
  const Verdict miss = verify(short_image, *tent_map);
  CHECK_FALSE(miss.ok);
  REQUIRE(miss.witness);
  CHECK(*miss.witness > Q("1/2"));
}

TEST_CASE("loosen examples") {
  const auto psi = pl_dyn(make_psi(params()), "psi");
  const auto loose = loosen(psi_horseshoe(), *psi);
  REQUIRE(std::holds_alternative<QuasiHorseshoe>(loose));
  const auto& q = std::get<QuasiHorseshoe>(loose);
  CHECK(q.pieces == singles({I("0", "5/16"), I("11/32", "21/32"), I("11/16", "1")}));
  CHECK(verify(q, *psi).kind == HorseshoeKind::Loose);

  const auto tent_map = pl_dyn(tent(), "tent");
  const QuasiHorseshoe tight{Interval(0, 1), singles({I("0", "1/2"), I("1/2", "1")}), 1, "tent"};
  CHECK(std::holds_alternative<TightReport>(loosen(tight, *tent_map)));

  const auto toy_map = pl_dyn(toy(), "toy");
  const QuasiHorseshoe raw{Interval(0, 2), singles({I("0", "3/2"), I("3/2", "2")}), 1, "toy"};
  const auto lt = loosen(raw, *toy_map);
  REQUIRE(std::holds_alternative<QuasiHorseshoe>(lt));
  CHECK(std::get<QuasiHorseshoe>(lt).pieces == singles({I("0", "5/4"), I("5/3", "2")}));
}

TEST_CASE("dichotomy examples") {
  const auto G = line_dyn(make_G(params()), "G");
  const auto F = line_dyn(make_F(params()), "F");
  const auto mirror = line_dyn(MirrorTranslationTiled(pl({{"0", "1"}, {"1", "0"}})), "mirror");
  const auto g = dichotomy(*G, I("-10", "10"));
  REQUIRE(std::holds_alternative<SwapStructure>(g));
  CHECK(std::get<SwapStructure>(g).c == 0);
  const auto f = dichotomy(*F, I("-10", "10"));
  REQUIRE(std::holds_alternative<BitransitiveEvidence>(f));
  const auto& ev = std::get<BitransitiveEvidence>(f);
  CHECK(ev.witness == I("-43/64", "0"));
  CHECK(ev.image.lo == Q("-1/64"));
  CHECK(std::holds_alternative<SwapStructure>(dichotomy(*mirror, I("-5", "5"))));
  CHECK(code_of([] { dichotomy(PLDynamics(toy(), "toy"), I("0", "2")); }) == ErrorCode::NotApplicable);
}

TEST_CASE("two fixed points finder") {
  const auto toy_map = pl_dyn(toy(), "toy");
  const FinderResult r = find_two_fixed(toy_map);
  CHECK(r.raw.base == I("0", "2"));
  CHECK(r.raw.pieces == singles({I("0", "3/2"), I("3/2", "2")}));
  CHECK(r.certificate.pieces == singles({I("0", "5/4"), I("5/3", "2")}));
  CHECK(r.kind == HorseshoeKind::Loose);

  const auto reflected = std::make_shared<ReflectedDynamics>(toy_map);
  const FinderResult rr = find_two_fixed(reflected);
  CHECK(rr.raw.base == I("-11/6", "-1"));
  CHECK(verify(rr.certificate, *reflected).ok);
  CHECK(verify(rr.raw, *reflected).ok);

  CHECK(code_of([] { find_two_fixed(line_dyn(make_F(params()), "F"), {3, 5}); }) == ErrorCode::NotApplicable);
}

TEST_CASE("half-line finder") {
  const auto H = line_dyn(make_H(params()), "H");
  const FinderResult r = find_halfline(H);
  CHECK(r.certificate.s() == 3);
  CHECK(r.certificate.iterate == 1);
  CHECK(r.raw.base == I("1/8", "1/4"));
  CHECK(r.raw.pieces == singles({I("1/8", "85/512"), I("85/512", "53/256"), I("53/256", "1/4")}));
  const Verdict v = verify(r.certificate, *H);
  CHECK(v.ok);
  CHECK(v.kind == HorseshoeKind::Loose);

  // Fixes [0,1] pointwise: [0,1] is invariant.
  const auto flat = std::make_shared<ShiftedIterate>(pl_dyn(pl({{"0", "0"}, {"1", "1"}, {"2", "3"}, {"4096", "3"}}), "id01"),
                                                     1, 0, Domain::half_line(0));
  CHECK(code_of([&] { find_halfline(flat, {3, 3}); }) == ErrorCode::ConstructionFailed);
  try {
    find_halfline(flat, {3, 3});
  } catch (const Error& e) {
    CHECK(e.detail() == "a>z1");
  }
}

TEST_CASE("unique fixed point finder on F") {
  const auto F = line_dyn(make_F(params()), "F");
  const FinderResult r = find_unique_fixed(F);
  CHECK(r.raw.base == I("0", "65/64"));
  CHECK(r.raw.iterate == 2);
  CHECK(r.raw.pieces == singles({I("0", "21/64"), I("21/64", "11/16"), I("11/16", "65/64")}));
  CHECK(r.certificate.pieces == singles({I("0", "21/64"), I("21/64", "21/32"), I("11/16", "1029/1024")}));
  const std::vector<std::pair<std::string, Rational>> chain{
      {"z", 0},           {"a", Q("-11/16")}, {"b", Q("11/16")}, {"c", Q("65/64")},
      {"p", Q("-21/64")}, {"d", Q("-65/64")}, {"q", Q("65/64")}, {"e", Q("21/20")},
      {"r", Q("-65/64")}, {"s", Q("21/64")},  {"t", Q("65/64")}};
  CHECK(r.chain == chain);
  CHECK(verify(r.certificate, *F).kind == HorseshoeKind::Loose);
}

TEST_CASE("unique fixed point finder on G uses the swap case") {
  const auto G = line_dyn(make_G(params()), "G");
  const FinderResult r = find_unique_fixed(G);
  CHECK(r.variant == "unique-fixed/swap");
  CHECK(r.certificate.iterate == 2);
  CHECK(verify(r.certificate, *G).ok);
  CHECK(code_of([] { find_unique_fixed(pl_dyn(toy(), "toy")); }) == ErrorCode::NotApplicable);
}

TEST_CASE("amplify") {
  const auto tent_map = pl_dyn(tent(), "tent");
  const QuasiHorseshoe tight{Interval(0, 1), singles({I("0", "1/2"), I("1/2", "1")}), 1, "tent"};
  CHECK(code_of([&] { amplify(tight, *tent_map, 3); }) == ErrorCode::NotLoose);

  const auto psi = pl_dyn(make_psi(params()), "psi");
  const auto loose = std::get<QuasiHorseshoe>(loosen(psi_horseshoe(), *psi));
  const AmplifyResult a = amplify(loose, *psi, 2);
  if (a.certificate) CHECK(verify(*a.certificate, *psi).ok);

  const auto toy_map = pl_dyn(toy(), "toy");
  const FinderResult r = find_two_fixed(toy_map);
  const AmplifyResult t = amplify(r.certificate, *toy_map, 3);
  if (t.certificate) {
    CHECK(verify(*t.certificate, *toy_map).ok);
    CHECK(t.certificate->s() == std::size_t(1) + (std::size_t(1) << t.depth));
  }

  const auto F = line_dyn(make_F(params()), "F");
  const FinderResult rf = find_unique_fixed(F);
  const AmplifyResult af = amplify(rf.certificate, *F, 2);
  if (af.certificate) CHECK(verify(*af.certificate, *F).ok);

  // Three full laps certified with two pieces: f^2 has 9 >= 2^2 + 1 crossings.
  const auto three = pl_dyn(tent3(), "tent3");
  const QuasiHorseshoe two_of_three{Interval(0, 1), singles({I("0", "1/3"), I("1/3", "2/3")}), 1, "tent3"};
  const AmplifyResult a3 = amplify(two_of_three, *three, 3);
  REQUIRE(a3.certificate);
  CHECK(a3.depth == 2);
  CHECK(a3.certificate->s() == 5);
  CHECK(a3.certificate->iterate == 2);
  CHECK(verify(*a3.certificate, *three).ok);
}

TEST_CASE("property: finder certificates re-verify for random lambda") {
  Sampler s(99);
  for (int trial = 0; trial < 10; ++trial) {
    Rational l = s.in(I("3", "5"));
    if (l == 3) l = Q("7/2");
    const auto F = line_dyn(make_F(FamilyParams::make(l)), "F");
    const FinderResult r = find_unique_fixed(F);
    CHECK(verify(r.certificate, *F).ok);
    CHECK(verify(r.raw, *F).ok);
    CHECK(r.certificate.s() == 3);
  }
}
