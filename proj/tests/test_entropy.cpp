#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "tranent/entropy.hpp"
#include "tranent/error.hpp"
#include "tranent/families.hpp"

using namespace tranent;
using namespace testing_support;

namespace {

const FamilyParams& params() {
  static const FamilyParams p = FamilyParams::make(Q("16/5"));
  return p;
}

IntMatrix M(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix out;
  for (const auto& r : rows) {
    std::vector<Integer> row;
    for (int x : r) row.emplace_back(x);
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix ones(std::size_t s) { return IntMatrix(s, std::vector<Integer>(s, Integer(1))); }

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

bool encloses(const RootEnclosure& e, double x) { return e.lo_float <= x && x <= e.hi_float; }

}  // namespace

TEST_CASE("covering matrices") {
  const PLDynamics t(tent(), "tent");
  CHECK(covering_matrix(t, singles({I("0", "1/2"), I("1/2", "1")}), 1).entries == ones(2));
  const PLDynamics psi(make_psi(params()), "psi");
  CHECK(covering_matrix(psi, singles({I("0", "5/16"), I("11/32", "21/32"), I("11/16", "1")}), 1).entries == ones(3));
  const LineDynamics F(make_F(params()), "F");
  CHECK(covering_matrix(F, singles({I("0", "21/64"), I("21/64", "11/16"), I("11/16", "65/64")}), 2).entries ==
        ones(3));
}

TEST_CASE("Perron root enclosures") {
  const auto three = perron_root(ones(3), 1e-9);
  CHECK(encloses(three, 3.0));
  CHECK(three.hi - three.lo <= from_double(1e-9));
  const auto fib = perron_root(M({{1, 1}, {1, 0}}), 1e-9);
  const double golden = (1 + std::sqrt(5.0)) / 2;
  CHECK(fib.lo_float <= golden + 1e-15);
  CHECK(fib.hi_float >= golden - 1e-15);
  CHECK(fib.hi_float - fib.lo_float <= 1e-9 + 1e-15);
  CHECK(encloses(perron_root(M({{0, 1}, {1, 0}}), 1e-9), 1.0));
  CHECK(encloses(perron_root(M({{2, 1}, {0, 3}}), 1e-9), 3.0));
  const auto nil = perron_root(M({{0, 1}, {0, 0}}), 1e-9);
  CHECK(nil.hi == 0);
  for (int s : {2, 3, 5}) CHECK(encloses(perron_root(ones(s), 1e-9), s));
}

TEST_CASE("Markov partitions and lap growth") {
  CHECK(markov_partition(tent(), 10) == std::vector<Rational>{0, Q("1/2"), 1});
  CHECK(markov_partition(tent3(), 10) == std::vector<Rational>{0, Q("1/3"), Q("2/3"), 1});
  CHECK(code_of([] { markov_partition(make_phi(params()), 10); }) == ErrorCode::SelfMapRequired);
  CHECK(markov_matrix(tent(), {0, Q("1/2"), 1}) == ones(2));

  const auto t = lap_entropy_sequence(tent(), 6);
  for (const auto& e : t) {
    CHECK(e.laps == (std::size_t(1) << e.n));
    CHECK(e.rate == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  }
  std::size_t expected = 1;
  for (const auto& e : lap_entropy_sequence(tent3(), 5)) {
    expected *= 3;
    CHECK(e.laps == expected);
    CHECK(e.rate == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  }
  const PLMap capped = pl({{"0", "0"}, {"1/2", "3/4"}, {"1", "1"}, {"5/4", "2"}, {"5/3", "2"}, {"2", "0"}});
  const auto seq = lap_entropy_sequence(capped, 5);
  for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq[i].rate <= seq[i - 1].rate + 1e-12);
}

TEST_CASE("lap rates approach the Markov entropy") {
  // Golden-mean tent: 0 -> 0, 1/2 -> 1... with a Markov partition.
  const PLMap m = pl({{"0", "1/2"}, {"1/2", "1"}, {"1", "0"}});
  const auto part = markov_partition(m, 10);
  REQUIRE(part);
  const auto root = perron_root(markov_matrix(m, *part), 1e-12);
  const double target = std::log((root.lo_float + root.hi_float) / 2);
  const auto seq = lap_entropy_sequence(m, 16);
  CHECK(std::abs(seq[15].rate - target) <= std::abs(seq[7].rate - target));
}

TEST_CASE("mixing classification") {
  CHECK(mixing_matrix_check(ones(3)).kind == MixingClass::Primitive);
  const auto swap = mixing_matrix_check(M({{0, 1}, {1, 0}}));
  CHECK(swap.kind == MixingClass::IrreduciblePeriodic);
  CHECK(swap.period == 2);
  CHECK(mixing_matrix_check(M({{1, 1}, {0, 1}})).kind == MixingClass::Reducible);
}

TEST_CASE("log bounds compare exactly") {
  const LogBound lower{3, 2, ""};
  const LogBound upper{Q("16/5"), 2, ""};
  const auto c = compare_logs(lower, upper);
  CHECK(c.sign == -1);
  CHECK(c.lhs == 15);
  CHECK(c.rhs == 16);
  const auto vs_log2 = compare_logs(upper, LogBound{2, 1, ""});
  CHECK(vs_log2.sign == -1);
  CHECK(vs_log2.lhs == 16);
  CHECK(vs_log2.rhs == 20);
  CHECK(lower.symbolic() == "log(3)/2");
  CHECK(LogBound{Q("16/5"), 1, ""}.symbolic() == "log(16/5)");
  CHECK(LogBound{1, 3, ""}.symbolic() == "0");
  CHECK(lower.lower_float() <= 0.5 * std::log(3.0));
  CHECK(lower.upper_float() >= 0.5 * std::log(3.0));
  CHECK(lower.upper_float() - lower.lower_float() < 1e-15);
}

TEST_CASE("entropy sandwiches") {
  const auto F = std::make_shared<LineDynamics>(make_F(params()), "F");
  const FinderResult rf = find_unique_fixed(F);
  const EntropyBounds bf = cr_bounds(*F, {rf.certificate}, {Q("16/5"), 2});
  CHECK(bf.lower.symbolic() == "log(3)/2");
  CHECK(bf.upper.symbolic() == "log(16/5)/2");
  CHECK(bf.lower.lower_float() == doctest::Approx(0.549306).epsilon(1e-6));
  CHECK(bf.upper.upper_float() == doctest::Approx(0.581576).epsilon(1e-6));
  CHECK(bf.lower_vs_upper.sign == -1);
  CHECK_FALSE(bf.lower_strict);

  const auto H = std::make_shared<LineDynamics>(make_H(params()), "H");
  const FinderResult rh = find_halfline(H);
  const EntropyBounds bh = cr_bounds(*H, {rh.certificate}, {Q("16/5"), 1});
  CHECK(bh.lower.symbolic() == "log(3)");
  CHECK(bh.upper.symbolic() == "log(16/5)");
  CHECK(bh.lower.lower_float() == doctest::Approx(1.098612).epsilon(1e-6));
  CHECK(bh.upper.upper_float() == doctest::Approx(1.163151).epsilon(1e-6));

  const EntropyBounds empty = cr_bounds(*F, {}, {1, 1});
  CHECK(empty.lower.symbolic() == "0");
  CHECK(empty.upper.symbolic() == "0");

  QuasiHorseshoe broken = rf.certificate;
  broken.iterate = 1;
  CHECK(code_of([&] { cr_bounds(*F, {broken}, {Q("16/5"), 2}); }) == ErrorCode::UncertifiedInput);
}

TEST_CASE("property: certificates give all-ones covering matrices") {
  Sampler s(3);
  for (int trial = 0; trial < 10; ++trial) {
    Rational l = s.in(I("3", "5"));
    if (l == 3) l = Q("4");
    const auto F = std::make_shared<LineDynamics>(make_F(FamilyParams::make(l)), "F");
    const FinderResult r = find_unique_fixed(F);
    const auto cm = covering_matrix(*F, r.certificate.pieces, r.certificate.iterate);
    CHECK(cm.entries == ones(3));
    CHECK(encloses(perron_root(cm.entries, 1e-9), 3.0));
  }
}
