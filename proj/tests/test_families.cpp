#include "doctest.h"
#include "support.hpp"
#include "tranent/error.hpp"
#include "tranent/families.hpp"

using namespace tranent;
using namespace testing_support;

namespace {

std::vector<std::pair<Rational, Rational>> as_pairs(const PLMap& m) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& n : m.nodes()) out.emplace_back(n.x, n.y);
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("phi nodes at 16/5") {
  const auto p = FamilyParams::make(Q("16/5"));
  CHECK(p.breakpoints() ==
        std::vector<Rational>{Q("5/16"), Q("21/64"), Q("11/32"), Q("21/32"), Q("43/64"), Q("11/16")});
  const std::vector<std::pair<Rational, Rational>> expected{
      {0, 1},           {Q("5/16"), 0},  {Q("21/64"), Q("-1/64")}, {Q("11/32"), 0},
      {Q("21/32"), 1},  {Q("43/64"), Q("65/64")}, {Q("11/16"), 1}, {1, 0}};
  CHECK(as_pairs(make_phi(p)) == expected);
}

TEST_CASE("psi nodes at 16/5") {
  const auto p = FamilyParams::make(Q("16/5"));
  const std::vector<std::pair<Rational, Rational>> expected{
      {0, 1}, {Q("21/64"), Q("-1/20")}, {Q("43/64"), Q("21/20")}, {1, 0}};
  CHECK(as_pairs(make_psi(p)) == expected);
  const Interval r = range(make_psi(p));
  CHECK(r.lo == (3 - p.lambda) / 4);
  CHECK(r.hi == (p.lambda + 1) / 4);
}

TEST_CASE("lambda at most 3 is rejected") {
  CHECK(code_of([] { FamilyParams::make(3); }) == ErrorCode::LambdaTooSmall);
  CHECK(code_of([] { FamilyParams::make(Q("5/2")); }) == ErrorCode::LambdaTooSmall);
  const auto p = FamilyParams::make(Q("7/2"));
  CHECK(p.q1 == Q("9/28"));
  CHECK(p.p2 == Q("5/14"));
  CHECK(p.q1 < p.p2);
}

TEST_CASE("sabotaged piece formula is caught") {
  auto pieces = phi_pieces(FamilyParams::make(Q("16/5")));
  pieces[3].intercept += Q("1/1000");
  CHECK(code_of([&] { assemble(pieces); }) == ErrorCode::ContinuityViolated);
}

TEST_CASE("F, G, H examples") {
  const auto p = FamilyParams::make(Q("16/5"));
  const TiledLineMap F = make_F(p);
  const TiledLineMap G = make_G(p);
  const TiledLineMap H = make_H(p);
  CHECK(eval_line(F, Q("-1/2")) == Q("1/2"));
  CHECK(eval_line(F, 3) == -3);
  CHECK(eval_line(F, -3) == 3);
  CHECK(global_lipschitz(F) == Q("16/5"));
  CHECK(fixed_points_line(G, I("-10", "10")) == std::vector<Interval>{Interval::point(0)});
  CHECK(image_interval(G, I("-1", "-1/2"), 1) == I("19/40", "41/40"));
  CHECK(eval_line(H, Q("1/2")) == Q("1/2"));
  CHECK(global_lipschitz(H) == Q("16/5"));
  CHECK(image_interval(H, I("1/4", "1/2"), 1) == I("19/80", "41/80"));
}

TEST_CASE("property: family invariants over random lambda") {
  Sampler s(7);
  for (int trial = 0; trial < 20; ++trial) {
    Rational l = s.in(I("3", "10"));
    if (l == 3) l = Q("31/10");
    const auto p = FamilyParams::make(l);
    const PLMap phi = make_phi(p);
    const Interval r = range(phi);
    CHECK(r.hi == (5 * l - 3) / (4 * l));
    CHECK(r.lo == (3 - l) / (4 * l));
    CHECK(r.hi > 1);
    CHECK(r.lo < 0);
    const PLMap psi = make_psi(p);
    for (const auto& piece : psi_pieces(p)) CHECK(range_on(psi, piece.piece).contains(Interval(0, 1)));
    const PLMap f2 = restrict_iterate(LineDynamics(make_F(p), "F"), I("-3", "3"), 2);
    CHECK(lipschitz_const(f2) == l);
  }
}
