#include <doctest.h>

#include "support.hpp"
#include "tranent/acceptance.hpp"
#include "tranent/error.hpp"
#include "tranent/families.hpp"
#include "tranent/mapspec.hpp"
#include "tranent/plot.hpp"
#include "tranent/report.hpp"

using namespace tranent;
using namespace testing_support;

namespace {

Error error_of(std::string_view text) {
  try {
    parse_mapspec(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error for " << text);
  return Error(ErrorCode::InvalidArgument, "");
}

}  // namespace

TEST_CASE("mapspec examples") {
  const MapSpec f = parse_mapspec(R"({"family":"F","lambda":"16/5"})");
  CHECK(f.family == "F");
  CHECK(f.lambda == Q("16/5"));
  const MapSpec t = parse_mapspec(R"({"plmap":{"nodes":[["0","0"],["1/2","1"],["1","0"]]}})");
  REQUIRE(t.plmap);
  CHECK(*t.plmap == tent());
  CHECK(parse_mapspec(R"({"family":"G","lambda":"7"})").lambda == 7);

  const Error small = error_of(R"({"family":"phi","lambda":"3"})");
  CHECK(small.code() == ErrorCode::ValidationError);
  CHECK(small.detail().find("LambdaTooSmall") != std::string::npos);
  CHECK(small.detail().find("line 1, column 17") != std::string::npos);
}

TEST_CASE("mapspec errors carry locations") {
  const Error syntax = error_of("{\n  \"family\": \"F\",\n  \"lambda\" \"16/5\"\n}");
  CHECK(syntax.code() == ErrorCode::ParseError);
  CHECK(syntax.detail().rfind("line 3,", 0) == 0);

  const Error unknown = error_of("{\"family\":\"F\",\n\"lambda\":\"16/5\",\n  \"colour\":\"red\"}");
  CHECK(unknown.code() == ErrorCode::ValidationError);
  CHECK(unknown.detail().rfind("line 3, column 3", 0) == 0);

  CHECK(error_of(R"({"family":"F","lambda":3.2})").code() == ErrorCode::ValidationError);
  CHECK(error_of(R"({"family":"K","lambda":"4"})").code() == ErrorCode::ValidationError);
  CHECK(error_of(R"({"family":"F"})").code() == ErrorCode::ValidationError);
  CHECK(error_of(R"({"plmap":{"nodes":[["0","0"]]}})").code() == ErrorCode::ValidationError);
  CHECK(error_of(R"({"plmap":{"nodes":[["1","0"],["0","1"]]}})").code() == ErrorCode::ValidationError);
  CHECK(error_of(R"({"plmap":{"nodes":[["0","0"],["1","1"]],"extra":1}})").code() == ErrorCode::ValidationError);
  CHECK(error_of(R"({"family":"F","lambda":"16/5","plmap":{}})").code() == ErrorCode::ValidationError);
  CHECK(error_of(R"({"family":"F","lambda":"1/0"})").code() == ErrorCode::ValidationError);
  CHECK(error_of("[1,2]").code() == ErrorCode::ValidationError);
}

TEST_CASE("mapspec round trip") {
  Sampler s;
  for (int i = 0; i < 100; ++i) {
    MapSpec spec;
    if (i % 2 == 0) {
      const char* names[] = {"phi", "psi", "F", "G", "H", "fbar"};
      spec = family_spec(names[s.integer(0, 5)], Q("3") + s.in(I("1/1000", "4")));
    } else {
      spec.plmap = s.plmap(I("-1", "1"), s.integer(1, 8));
    }
    const std::string text = serialize(spec);
    CHECK(parse_mapspec(text) == spec);
    CHECK(serialize(parse_mapspec(text)) == text);
  }
}

TEST_CASE("build dynamics from a mapspec") {
  const auto f = build_dynamics(family_spec("F", Q("16/5")));
  CHECK(f->id() == "F(16/5)");
  CHECK(f->eval(Q("1/2")) == Q("-1/2"));
  const auto fbar = build_dynamics(family_spec("fbar", Q("16/5")));
  CHECK(fbar->eval(0) == 1);
  CHECK(build_dynamics(parse_mapspec(R"({"plmap":{"nodes":[["0","0"],["1","1"]]}})"))->eval(Q("1/3")) == Q("1/3"));
}

TEST_CASE("reports are sorted and certificates round trip") {
  const auto f = build_dynamics(family_spec("F", Q("16/5")));
  const FinderResult r = find_unique_fixed(f);
  const Json j = to_json(r);
  const std::string text = render(j);
  CHECK(text.find("\"certificate\"") < text.find("\"chain\""));
  CHECK(text.find("\"chain\"") < text.find("\"loosened\""));
  CHECK(certificate_from_json(j) == r.certificate);
  CHECK(certificate_from_json(to_json(r.raw)) == r.raw);
  CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"base":[1,2],"pieces":[]})")), Error);
}

TEST_CASE("plots") {
  const auto phi = build_dynamics(family_spec("phi", Q("16/5")));
  const std::string a = render_plot(*phi, I("0", "1"), 1);
  CHECK(a == render_plot(*phi, I("0", "1"), 1));
  CHECK(a.rfind("<?xml", 0) == 0);
  CHECK(a.find("version=\"1.1\"") != std::string::npos);
  // 7 pieces, so 8 polyline vertices.
  const auto pts = a.find("points=\"");
  const auto end = a.find('"', pts + 8);
  const std::string list = a.substr(pts + 8, end - pts - 8);
  CHECK(std::count(list.begin(), list.end(), ',') == 8);

  const auto f = build_dynamics(family_spec("F", Q("16/5")));
  const std::string f2 = render_plot(*f, I("-3", "3"), 2);
  CHECK(f2.find("<circle") != std::string::npos);
  CHECK(f2.find("accumulation") == std::string::npos);

  const auto g = build_dynamics(family_spec("G", Q("16/5")));
  const std::string gp = render_plot(*g, I("-2", "2"), 1);
  CHECK(gp.find("accumulation point, tiles |k| &lt;= 12") != std::string::npos);
  CHECK(std::count(gp.begin(), gp.end(), '\n') > 5);
  PlotOptions coarse;
  coarse.tile_cutoff = 4;
  CHECK(render_plot(*g, I("-2", "2"), 1, coarse).size() < gp.size());
  CHECK_THROWS_AS(render_plot(*g, I("1", "1"), 1), Error);
}

TEST_CASE("acceptance runner") {
  const AcceptanceReport a = run_acceptance();
  REQUIRE(a.criteria.size() == 14);
  for (std::size_t i = 0; i < a.criteria.size(); ++i) CHECK(a.criteria[i].id == static_cast<int>(i + 1));
  const std::string text = render(a.to_json());
  CHECK(text == render(run_acceptance().to_json()));
  CHECK(text.find("lower=log(3)/2") != std::string::npos);
  CHECK(a.criteria[0].passed);

  const AcceptanceReport broken = run_acceptance({true});
  CHECK_FALSE(broken.all_passed());
  CHECK_FALSE(broken.criteria[0].passed);
  CHECK(broken.criteria[0].summary.find("ContinuityViolated") != std::string::npos);
}
