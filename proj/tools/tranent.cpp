#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tranent/acceptance.hpp"
#include "tranent/error.hpp"
#include "tranent/families.hpp"
#include "tranent/mapspec.hpp"
#include "tranent/plot.hpp"
#include "tranent/report.hpp"

using namespace tranent;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string map;
  std::string lambda = "16/5";
  std::string window;
  int iterate = 1;
  std::string out;
  std::string variant = "auto";
  std::string n_range;
  std::string eps = "1/2";
  double tol = 1e-9;
  std::string cert;
  bool sabotage = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + out);
  f << text;
}

MapSpec load_map(const Options& o) {
  if (o.map.empty()) throw Error(ErrorCode::InvalidArgument, "--map is required");
  if (is_family_name(o.map)) return family_spec(o.map, parse_rational(o.lambda));
  return parse_mapspec(read_file(o.map));
}

// Default windows match the geometry of each map.
Interval window_for(const Options& o, const Dynamics& f) {
  if (!o.window.empty()) {
    const auto colon = o.window.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::InvalidArgument, "--window expects lo:hi");
    const Rational lo = parse_rational(o.window.substr(0, colon));
    const Rational hi = parse_rational(o.window.substr(colon + 1));
    if (hi < lo) throw Error(ErrorCode::InvalidArgument, "--window has hi < lo");
    return Interval(lo, hi);
  }
  const Domain d = f.domain();
  if (d.lo && d.hi) return Interval(*d.lo, *d.hi);
  if (d.lo) return Interval(*d.lo, *d.lo + 8);
  return Interval(-4, 4);
}

std::pair<int, int> n_range(const Options& o, int lo, int hi) {
  if (o.n_range.empty()) return {lo, hi};
  const auto dots = o.n_range.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(o.n_range);
      return {n, n};
    }
    return {std::stoi(o.n_range.substr(0, dots)), std::stoi(o.n_range.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "--n expects a..b");
  }
}

FinderResult run_finder(const DynamicsPtr& f, const std::string& variant) {
  if (variant == "two-fixed") return find_two_fixed(f);
  if (variant == "halfline") return find_halfline(f);
  if (variant == "unique-fixed") return find_unique_fixed(f);
  if (variant != "auto") throw Error(ErrorCode::InvalidArgument, "unknown variant " + variant);
  const Domain d = f->domain();
  if (d.lo && !d.hi) return find_halfline(f);
  try {
    return find_unique_fixed(f);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotApplicable) throw;
  }
  return find_two_fixed(f);
}

// Lipschitz constant of f^iterate: exact for tiled maps, else on the window.
LipschitzBound lipschitz_for(const Dynamics& f, const Interval& w, int iterate) {
  if (const auto* l = dynamic_cast<const LineDynamics*>(&f); l && iterate == 1) {
    return {global_lipschitz(l->map()), 1};
  }
  return {lipschitz_const(restrict_iterate(f, w, iterate)), iterate};
}

int cmd_plot(const Options& o) {
  const auto f = build_dynamics(load_map(o));
  emit(render_plot(*f, window_for(o, *f), o.iterate), o.out);
  return kOk;
}

int cmd_fixed_points(const Options& o) {
  const auto f = build_dynamics(load_map(o));
  const Interval w = window_for(o, *f);
  std::vector<Interval> pts;
  if (o.iterate == 1) {
    pts = fixed_point_census(*f, w, 20);
  } else {
    pts = periodic_points(*f, o.iterate, w);
  }
  Json j{{"map", f->id()}, {"window", to_json(w)}, {"iterate", o.iterate},
         {"fixed_points", to_json(IntervalUnion(pts.begin(), pts.end()))}};
  Json acc = Json::array();
  for (const auto& a : f->accumulation_points()) {
    if (w.contains(a)) acc.push_back(to_string(a));
  }
  j["accumulation_points"] = acc;
  emit(render(j), o.out);
  return kOk;
}

int cmd_find(const Options& o) {
  const auto f = build_dynamics(load_map(o));
  const FinderResult r = run_finder(f, o.variant);
  const Verdict v = verify(r.certificate, *f);
  Json j = to_json(r);
  j["verdict"] = to_json(v);
  emit(render(j), o.out);
  return v.ok ? kOk : kFailed;
}

int cmd_verify(const Options& o) {
  if (o.cert.empty()) throw Error(ErrorCode::InvalidArgument, "--cert is required");
  const auto f = build_dynamics(load_map(o));
  Json doc;
  try {
    doc = Json::parse(read_file(o.cert));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, o.cert + ": " + e.what());
  }
  const QuasiHorseshoe h = certificate_from_json(doc);
  const Verdict v = verify(h, *f);
  emit(render({{"map", f->id()}, {"certificate", to_json(h)}, {"verdict", to_json(v)}}), o.out);
  return v.ok ? kOk : kFailed;
}

int cmd_entropy(const Options& o) {
  const auto f = build_dynamics(load_map(o));
  Json j{{"map", f->id()}};
  std::vector<QuasiHorseshoe> certs;
  if (!o.cert.empty()) {
    certs.push_back(certificate_from_json(Json::parse(read_file(o.cert))));
  } else {
    const FinderResult r = run_finder(f, o.variant);
    certs.push_back(r.certificate);
    j["finder"] = to_json(r);
  }
  const QuasiHorseshoe& h = certs.front();
  const Interval w = o.window.empty() ? hull(window_for(o, *f), h.base) : window_for(o, *f);
  const LipschitzBound lip = lipschitz_for(*f, w, h.iterate);
  const EntropyBounds b = cr_bounds(*f, certs, lip);
  j["lipschitz"] = {{"constant", to_string(lip.constant)}, {"iterate", lip.iterate}};
  j["bounds"] = to_json(b);
  const CoveringMatrix m = covering_matrix(*f, h.pieces, h.iterate);
  j["covering_matrix"] = to_json(m);
  j["perron_root"] = to_json(perron_root(m.entries, o.tol));
  const MixingVerdict mv = mixing_matrix_check(m.entries);
  j["matrix_mixing"] = {{"class", std::string(to_string(mv.kind))}, {"period", mv.period}};
  if (const auto* pl = dynamic_cast<const PLDynamics*>(f.get())) {
    const auto [lo, hi] = n_range(o, 1, 8);
    try {
      Json laps = Json::array();
      for (const auto& e : lap_entropy_sequence(pl->map(), hi)) {
        if (e.n >= lo) laps.push_back({{"n", e.n}, {"laps", e.laps}, {"rate", e.rate}});
      }
      j["lap_sequence"] = laps;
    } catch (const Error& e) {
      j["lap_sequence"] = std::string(to_string(e.code())) + ": " + e.detail();
    }
  }
  emit(render(j), o.out);
  return kOk;
}

int cmd_spec(const Options& o) {
  const auto f = build_dynamics(load_map(o));
  const auto [lo, hi] = n_range(o, 2, 8);
  const SpecVerdict v = refute_specification(*f, parse_rational(o.eps), lo, hi);
  emit(render(to_json(v)), o.out);
  return kOk;
}

int cmd_acceptance(const Options& o) {
  const AcceptanceReport r = run_acceptance({o.sabotage});
  for (const auto& c : r.criteria) {
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.id << " " << c.title << ": " << c.summary << "\n";
  }
  emit(render(r.to_json()), o.out);
  return r.all_passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for transitive piecewise linear maps"};
  app.require_subcommand(1);
  Options o;

  auto map_opts = [&](CLI::App* sub) {
    sub->add_option("--map", o.map, "family name (phi psi F G H fbar) or mapspec file")->required();
    sub->add_option("--lambda", o.lambda, "family slope as p/q");
    sub->add_option("--window", o.window, "window lo:hi");
    sub->add_option("--out", o.out, "output file (default stdout)");
  };

  auto* plot = app.add_subcommand("plot", "SVG graph of an iterate");
  map_opts(plot);
  plot->add_option("--iterate", o.iterate)->check(CLI::PositiveNumber);

  auto* fixed = app.add_subcommand("fixed-points", "fixed points of an iterate on a window");
  map_opts(fixed);
  fixed->add_option("--iterate", o.iterate)->check(CLI::PositiveNumber);

  auto* find = app.add_subcommand("find-horseshoe", "construct and loosen a quasihorseshoe");
  map_opts(find);
  find->add_option("--variant", o.variant)->check(CLI::IsMember({"auto", "two-fixed", "halfline", "unique-fixed"}));

  auto* verify_cmd = app.add_subcommand("verify-horseshoe", "check a certificate against a map");
  map_opts(verify_cmd);
  verify_cmd->add_option("--cert", o.cert, "certificate JSON")->required();

  auto* entropy = app.add_subcommand("entropy", "entropy bounds from a certificate");
  map_opts(entropy);
  entropy->add_option("--cert", o.cert, "certificate JSON (default: run the finder)");
  entropy->add_option("--variant", o.variant)->check(CLI::IsMember({"auto", "two-fixed", "halfline", "unique-fixed"}));
  entropy->add_option("--n", o.n_range, "lap sequence range a..b");
  entropy->add_option("--tol", o.tol, "Perron enclosure width");

  auto* spec = app.add_subcommand("spec-refute", "travel times and the specification verdict");
  map_opts(spec);
  spec->add_option("--eps", o.eps, "tracing radius p/q");
  spec->add_option("--n", o.n_range, "scale range a..b");

  auto* acc = app.add_subcommand("acceptance", "run the acceptance criteria");
  acc->add_option("--out", o.out, "report file (default stdout)");
  acc->add_flag("--sabotage-phi", o.sabotage, "break continuity of the phi template");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*plot) return cmd_plot(o);
    if (*fixed) return cmd_fixed_points(o);
    if (*find) return cmd_find(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*entropy) return cmd_entropy(o);
    if (*spec) return cmd_spec(o);
    if (*acc) return cmd_acceptance(o);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.detail() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::ValidationError:
      case ErrorCode::InvalidArgument:
      case ErrorCode::LambdaTooSmall:
        return kUsage;
      default:
        return kFailed;
    }
  }
  return kUsage;
}
