#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tranent/dynamics.hpp"
#include "tranent/plmap.hpp"

namespace tranent {

/// Either a named family at a parameter or an explicit node list.
struct MapSpec {
  std::optional<std::string> family;  // phi, psi, F, G, H, fbar
  Rational lambda;
  std::optional<PLMap> plmap;

  bool operator==(const MapSpec& o) const {
    return family == o.family && lambda == o.lambda && plmap == o.plmap;
  }
};

bool is_family_name(std::string_view name);

/// Strict JSON mapspec parser. Rationals must be strings. Errors carry
/// "line L, column C" of the offending token or key: ParseError for
/// malformed text, ValidationError for well-formed but invalid content.
MapSpec parse_mapspec(std::string_view text);

std::string serialize(const MapSpec& spec);

MapSpec family_spec(const std::string& name, const Rational& lambda);

/// Evaluator for a mapspec; family maps are validated here.
DynamicsPtr build_dynamics(const MapSpec& spec);

}  // namespace tranent
