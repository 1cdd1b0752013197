#pragma once

// The five commands as functions from a loaded project to a report. Exit
// status is 0 when the report passed and 1 otherwise; input errors throw
// ParseError, NameNotFound or UsageError.

#include <optional>
#include <string>

#include "qss_cli/project.hpp"
#include "qss_cli/reports.hpp"

namespace qss::cli {

ValidateReport run_validate(const Project& p);

AnalyzeReport run_analyze(const Project& p, const std::string& action);

struct StabilityOptions {
  int q_max = 6;
  /// Last r tabulated when R is infinite; default max(20, 4 q_max).
  std::optional<std::int64_t> r_max;
  bool theorem_a = false;
  std::size_t budget = spec::kDefaultBudget;
};
/// `name` is a profile or a family.
StabilityReport run_stability(const Project& p, const std::string& name, const StabilityOptions& opts = {});

struct SpectralOptions {
  std::optional<int> max_p;
  std::optional<int> max_q;
  std::optional<int> max_total;
  int pages = 3;
  /// "both", "horizontal" (rows) or "vertical" (columns).
  std::string filtration = "both";
  bool theorem_a = true;
  std::size_t budget = spec::kDefaultBudget;
};
/// `name` is an action or a double complex.
SpectralReport run_spectral(const Project& p, const std::string& name, const SpectralOptions& opts = {});

HomotopyCheckReport run_homotopy_check(const Project& p, const std::string& name,
                                       std::optional<int> up_to = std::nullopt);

}  // namespace qss::cli
