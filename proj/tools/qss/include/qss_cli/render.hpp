#pragma once

// Human-readable text for the reports.

#include <string>

#include "qss_cli/reports.hpp"

namespace qss::cli {

std::string render(const ValidateReport& r);
std::string render(const AnalyzeReport& r);
/// Verdict grid with columns q and rows r, then the r(q) table.
std::string render(const StabilityReport& r);
/// Page grids with p to the right and q upwards.
std::string render(const SpectralReport& r);
std::string render(const HomotopyCheckReport& r);

}  // namespace qss::cli
