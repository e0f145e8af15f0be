#include "tranent/mapspec.hpp"

#include <json.hpp>

#include "tranent/error.hpp"
#include "tranent/families.hpp"
#include "tranent/linemap.hpp"

namespace tranent {

namespace {

using nlohmann::json;

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;
};

Location locate(std::string_view text, std::size_t offset) {
  Location loc;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

std::string at(const Location& l) {
  return "line " + std::to_string(l.line) + ", column " + std::to_string(l.column);
}

// Position of the first occurrence of a quoted key, or of the text start.
Location locate_key(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto pos = text.find(quoted);
  return locate(text, pos == std::string_view::npos ? 0 : pos);
}

[[noreturn]] void invalid(std::string_view text, std::string_view key, const std::string& what) {
  throw Error(ErrorCode::ValidationError, at(locate_key(text, key)) + ": " + what);
}

Rational rational_field(std::string_view text, std::string_view key, const json& value) {
  if (!value.is_string()) invalid(text, key, "rationals must be written as strings such as \"16/5\"");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const Error& e) {
    invalid(text, key, e.detail());
  }
}

void only_keys(std::string_view text, const json& obj, std::initializer_list<std::string_view> allowed) {
  for (const auto& [k, v] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) invalid(text, k, "unknown field \"" + k + "\"");
  }
}

}  // namespace

bool is_family_name(std::string_view name) {
  for (const char* f : {"phi", "psi", "F", "G", "H", "fbar"}) {
    if (name == f) return true;
  }
  return false;
}

MapSpec family_spec(const std::string& name, const Rational& lambda) {
  if (!is_family_name(name)) throw Error(ErrorCode::ValidationError, "unknown family \"" + name + "\"");
  FamilyParams::make(lambda);
  return MapSpec{name, lambda, std::nullopt};
}

MapSpec parse_mapspec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    std::string msg = e.what();
    if (const auto p = msg.find("; "); p != std::string::npos) msg = msg.substr(p + 2);
    throw Error(ErrorCode::ParseError, at(locate(text, offset)) + ": " + msg);
  }
  if (!doc.is_object()) invalid(text, "", "mapspec must be a JSON object");
  only_keys(text, doc, {"family", "lambda", "plmap"});
  const bool has_family = doc.contains("family");
  const bool has_plmap = doc.contains("plmap");
  if (has_family == has_plmap) invalid(text, has_plmap ? "plmap" : "", "give exactly one of \"family\" or \"plmap\"");

  MapSpec spec;
  if (has_family) {
    if (!doc["family"].is_string()) invalid(text, "family", "family must be a string");
    const std::string name = doc["family"].get<std::string>();
    if (!is_family_name(name)) invalid(text, "family", "unknown family \"" + name + "\"");
    if (!doc.contains("lambda")) invalid(text, "family", "family maps need \"lambda\"");
    spec.family = name;
    spec.lambda = rational_field(text, "lambda", doc["lambda"]);
    try {
      FamilyParams::make(spec.lambda);
    } catch (const Error& e) {
      invalid(text, "lambda", std::string(to_string(e.code())) + ": " + e.detail());
    }
    return spec;
  }
  if (doc.contains("lambda")) invalid(text, "lambda", "\"lambda\" only applies to family maps");
  const json& pl = doc["plmap"];
  if (!pl.is_object()) invalid(text, "plmap", "plmap must be an object");
  only_keys(text, pl, {"nodes"});
  if (!pl.contains("nodes") || !pl["nodes"].is_array()) invalid(text, "plmap", "plmap needs a \"nodes\" array");
  std::vector<Node> nodes;
  for (const auto& n : pl["nodes"]) {
    if (!n.is_array() || n.size() != 2) invalid(text, "nodes", "each node must be a pair [\"x\", \"y\"]");
    nodes.push_back({rational_field(text, "nodes", n[0]), rational_field(text, "nodes", n[1])});
  }
  try {
    spec.plmap = PLMap(std::move(nodes));
  } catch (const Error& e) {
    invalid(text, "nodes", e.detail());
  }
  return spec;
}

std::string serialize(const MapSpec& spec) {
  json doc = json::object();
  if (spec.family) {
    doc["family"] = *spec.family;
    doc["lambda"] = to_string(spec.lambda);
  } else if (spec.plmap) {
    json nodes = json::array();
    for (const auto& n : spec.plmap->nodes()) nodes.push_back({to_string(n.x), to_string(n.y)});
    doc["plmap"] = {{"nodes", nodes}};
  }
  return doc.dump();
}

DynamicsPtr build_dynamics(const MapSpec& spec) {
  if (spec.plmap) return std::make_shared<PLDynamics>(*spec.plmap, "plmap");
  if (!spec.family) throw Error(ErrorCode::ValidationError, "empty mapspec");
  const auto p = FamilyParams::make(spec.lambda);
  const std::string& name = *spec.family;
  const std::string id = name + "(" + to_string(spec.lambda) + ")";
  if (name == "phi") return std::make_shared<PLDynamics>(make_phi(p), id);
  if (name == "psi") return std::make_shared<PLDynamics>(make_psi(p), id);
  if (name == "F") return std::make_shared<LineDynamics>(make_F(p), id);
  if (name == "G") return std::make_shared<LineDynamics>(make_G(p), id);
  if (name == "H") return std::make_shared<LineDynamics>(make_H(p), id);
  if (name == "fbar") return std::make_shared<CompactifiedDynamics>(make_fbar(p), id);
  throw Error(ErrorCode::ValidationError, "unknown family \"" + name + "\"");
}

}  // namespace tranent
