#pragma once

#include <string>
#include <vector>

#include "tranent/report.hpp"

namespace tranent {

struct AcceptanceOptions {
  /// Moves one intercept of the φ template so its pieces no longer meet,
  /// to check that the continuity criterion notices.
  bool sabotage_phi = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string summary;
  Json detail;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;

  bool all_passed() const;
  Json to_json() const;
};

/// Runs the fourteen acceptance criteria in order. Exact checks only, except
/// float enclosures of logarithms and Perron roots where a tolerance is named.
AcceptanceReport run_acceptance(const AcceptanceOptions& opts = {});

}  // namespace tranent
