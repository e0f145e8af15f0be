#include "tranent/report.hpp"

#include "tranent/error.hpp"

namespace tranent {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Interval& i) { return Json::array({to_string(i.lo), to_string(i.hi)}); }

Json to_json(const IntervalUnion& u) {
  Json out = Json::array();
  for (const auto& c : u) out.push_back(to_json(c));
  return out;
}

Json to_json(const QuasiHorseshoe& h) {
  Json pieces = Json::array();
  for (const auto& p : h.pieces) pieces.push_back(to_json(p));
  return {{"base", to_json(h.base)}, {"pieces", pieces}, {"iterate", h.iterate}, {"map", h.map_id}};
}

Json to_json(const Verdict& v) {
  Json j{{"ok", v.ok}, {"kind", std::string(to_string(v.kind))}, {"reason", v.reason}};
  if (v.witness) j["witness"] = to_string(*v.witness);
  return j;
}

Json to_json(const FinderResult& r) {
  Json chain = Json::object();
  for (const auto& [name, value] : r.chain) chain[name] = to_string(value);
  Json cert = to_json(r.certificate);
  cert["kind"] = std::string(to_string(r.kind));
  return {{"variant", r.variant},  {"raw", to_json(r.raw)},     {"certificate", cert},
          {"loosened", r.loosened}, {"window", to_json(r.window)}, {"chain", chain}};
}

Json to_json(const AmplifyResult& a) {
  Json j{{"depth", a.depth}, {"crossings", a.crossings}};
  if (a.certificate) {
    j["certificate"] = to_json(*a.certificate);
    j["status"] = "amplified";
  } else {
    j["status"] = "unknown";
  }
  return j;
}

Json to_json(const DichotomyResult& d) {
  if (const auto* s = std::get_if<SwapStructure>(&d)) {
    return {{"case", "swap"},
            {"fixed_point", to_string(s->c)},
            {"left", to_json(s->left)},
            {"right", to_json(s->right)},
            {"left_image", to_json(s->left_image)},
            {"right_image", to_json(s->right_image)}};
  }
  const auto& b = std::get<BitransitiveEvidence>(d);
  return {{"case", "bitransitive"},
          {"fixed_point", to_string(b.c)},
          {"witness", to_json(b.witness)},
          {"image", to_json(b.image)}};
}

Json to_json(const LogBound& b) {
  return {{"symbolic", b.symbolic()},
          {"argument", to_string(b.argument)},
          {"divisor", b.divisor},
          {"provenance", b.provenance},
          {"enclosure", Json::array({b.lower_float(), b.upper_float()})}};
}

Json to_json(const LogComparison& c) {
  return {{"sign", c.sign}, {"lhs", c.lhs.get_str()}, {"rhs", c.rhs.get_str()}};
}

Json to_json(const EntropyBounds& b) {
  return {{"lower", to_json(b.lower)},
          {"upper", to_json(b.upper)},
          {"lower_strict", b.lower_strict},
          {"strictness", b.lower_strict ? "strict" : "pending-amplification"},
          {"lower_vs_upper", to_json(b.lower_vs_upper)}};
}

Json to_json(const RootEnclosure& r) {
  return {{"lo", to_string(r.lo)},
          {"hi", to_string(r.hi)},
          {"float", Json::array({r.lo_float, r.hi_float})},
          {"rounds", r.rounds}};
}

Json to_json(const CoveringMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.get_si());
    rows.push_back(r);
  }
  Json pieces = Json::array();
  for (const auto& p : m.pieces) pieces.push_back(to_json(p));
  return {{"pieces", pieces}, {"entries", rows}, {"iterate", m.iterate}};
}

Json to_json(const RefutationCertificate& c) {
  Json table = Json::array();
  for (const auto& e : c.table) {
    Json row{{"n", e.n}, {"target", to_string(e.target)}, {"lower_bound", e.lower_bound}};
    row["steps"] = e.steps ? Json(*e.steps) : Json(nullptr);
    table.push_back(row);
  }
  Json disp = Json::array();
  for (const auto& d : c.displacement) {
    disp.push_back({{"radius", to_string(d.radius)},
                    {"image", to_json(d.image)},
                    {"allowed", to_json(d.allowed)},
                    {"holds", d.holds}});
  }
  Json obstructed = Json::array();
  for (const auto& inst : c.obstructed) {
    Json targets = Json::array();
    for (const auto& t : inst.targets) {
      targets.push_back({{"y", to_string(t.y)}, {"first", t.first}, {"last", t.last}});
    }
    obstructed.push_back({{"targets", targets}, {"eps", to_string(inst.eps)}, {"gap", inst.gap}});
  }
  return {{"map", c.map_id},       {"geometry", c.geometry},  {"eps", to_string(c.eps)},
          {"source", to_json(c.source)}, {"table", table}, {"displacement", disp},
          {"obstructed", obstructed}};
}

Json to_json(const SpecVerdict& v) {
  return {{"status", v.refuted ? "refuted" : "not-refuted"}, {"reason", v.reason}, {"evidence", to_json(v.evidence)}};
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ValidationError, "certificate: " + what); }

Rational rational_at(const Json& j) {
  if (!j.is_string()) bad("rationals must be strings");
  return parse_rational(j.get<std::string>());
}

Interval interval_at(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("intervals are [\"lo\", \"hi\"] pairs");
  const Rational lo = rational_at(j[0]);
  const Rational hi = rational_at(j[1]);
  if (hi < lo) bad("interval " + j.dump() + " is reversed");
  return Interval(lo, hi);
}

}  // namespace

QuasiHorseshoe certificate_from_json(const Json& j) {
  if (!j.is_object()) bad("expected an object");
  const Json& c = j.contains("certificate") ? j["certificate"] : j;
  if (!c.contains("base") || !c.contains("pieces")) bad("needs \"base\" and \"pieces\"");
  QuasiHorseshoe h;
  h.base = interval_at(c["base"]);
  if (!c["pieces"].is_array()) bad("\"pieces\" must be an array");
  for (const auto& p : c["pieces"]) {
    if (!p.is_array()) bad("each piece is a list of intervals");
    IntervalUnion u;
    for (const auto& part : p) u.push_back(interval_at(part));
    h.pieces.push_back(std::move(u));
  }
  if (c.contains("iterate")) {
    if (!c["iterate"].is_number_integer()) bad("\"iterate\" must be an integer");
    h.iterate = c["iterate"].get<int>();
  }
  if (c.contains("map") && c["map"].is_string()) h.map_id = c["map"].get<std::string>();
  return h;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tranent
