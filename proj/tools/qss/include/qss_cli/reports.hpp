#pragma once

// Report values produced by the commands. Every report converts to and from
// JSON; from_json(to_json(x)) == x.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qss/ext_int.hpp"
#include "qss/quillen.hpp"
#include "qss/spectral.hpp"
#include "qss_cli/json_io.hpp"

namespace qss::cli {

struct CheckItem {
  std::string kind;
  std::string name;
  bool passed = true;
  std::vector<std::string> failures;
  bool operator==(const CheckItem&) const = default;
};

struct ValidateReport {
  bool passed = true;
  std::vector<CheckItem> items;
  std::vector<std::string> problems;
  bool operator==(const ValidateReport&) const = default;
};

struct AnalyzeReport {
  std::string action;
  std::size_t group_order = 0;
  std::vector<std::size_t> level_sizes;
  std::vector<std::size_t> reduced_cohomology;
  ExtInt gamma0;
  ExtInt tau0;
  std::vector<std::size_t> orbit_counts;
  /// o_0..o_tau0 along the generic flag.
  std::vector<std::uint32_t> flag;
  std::vector<std::size_t> stabilizer_orders;
  std::vector<std::string> notes;
  bool operator==(const AnalyzeReport&) const = default;
};

struct CheckSummary {
  std::string name;
  bool applicable = true;
  bool passed = true;
  int covered_through = -1;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool operator==(const CheckSummary&) const = default;
};

struct TheoremASummary {
  bool passed = true;
  bool partial = false;
  ExtInt gamma0;
  ExtInt tau0;
  int truncation = 0;
  int exact_through = -1;
  std::vector<CheckSummary> checks;
  /// Classification of d_1^{p,0}, index p.
  std::vector<std::string> bottom_row;
  bool operator==(const TheoremASummary&) const = default;
};
TheoremASummary summarize(const spec::TheoremAReport& r);

struct MemberSummary {
  int r = 0;
  bool passed = true;
  ExtInt gamma;
  ExtInt tau;
  std::vector<std::size_t> orbit_counts;
  std::vector<std::size_t> stabilizer_orders;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  std::optional<TheoremASummary> theorem_a;
  bool operator==(const MemberSummary&) const = default;
};

struct StabilityRowSummary {
  int q = 0;
  std::optional<std::int64_t> first_iso;
  std::optional<std::int64_t> stable_from;
  bool operator==(const StabilityRowSummary&) const = default;
};

struct StabilityReport {
  /// "profile" or "family".
  std::string source;
  std::string name;
  ExtInt R;
  int q0 = 1;
  int q_max = 0;
  std::int64_t last_r = -1;
  /// gamma(r), tau(r) for r = 0..last_r + 1.
  std::vector<ExtInt> gamma;
  std::vector<ExtInt> tau;
  /// verdicts[q][r]: "isomorphism", "injection" or "unknown".
  std::vector<std::vector<std::string>> verdicts;
  /// margins[q][r] = min{dual gamma, dual tau - 1}.
  std::vector<std::vector<ExtInt>> margins;
  std::vector<StabilityRowSummary> rows;
  /// Family verification, empty for profiles.
  std::optional<bool> family_passed;
  std::vector<MemberSummary> members;
  std::vector<std::string> failures;
  bool operator==(const StabilityReport&) const = default;
};
StabilityReport stability_report(const quillen::StabilityProfile& p, const quillen::StabilityTable& t);

struct PageSummary {
  int r = 1;
  std::vector<std::vector<std::size_t>> dims;
  /// Rank of d_r out of each cell.
  std::vector<std::vector<std::size_t>> d_ranks;
  bool operator==(const PageSummary&) const = default;
};

struct SequenceSummary {
  std::string filtration;
  int num_p = 0;
  int num_q = 0;
  int exact_through = -1;
  int stable_page = 1;
  std::vector<PageSummary> pages;
  std::vector<std::vector<std::size_t>> e_infinity;
  /// Sum of E_infinity per total degree 0..exact_through.
  std::vector<std::size_t> totals;
  std::vector<std::string> consistency_failures;
  bool operator==(const SequenceSummary&) const = default;
};
/// Pages 1..max_page (capped at the computed pages).
SequenceSummary summarize(const spec::SpectralSequence& s, int max_page);

struct SpectralReport {
  /// "action" or "double_complex".
  std::string source;
  std::string name;
  int truncation = -1;
  int exact_through = -1;
  std::vector<SequenceSummary> sequences;
  /// Cohomology of the total complex through exact_through.
  std::vector<std::size_t> total_cohomology;
  bool totals_agree = true;
  std::optional<TheoremASummary> theorem_a;
  std::vector<std::string> notes;
  bool passed = true;
  bool operator==(const SpectralReport&) const = default;
};

struct HomotopyDegreeSummary {
  int degree = 0;
  bool identity_checked = false;
  bool identity_holds = true;
  bool bound_holds = true;
  std::string max_column_norm;
  std::optional<std::size_t> offending_simplex;
  bool operator==(const HomotopyDegreeSummary&) const = default;
};

struct HomotopyCheckReport {
  std::string name;
  std::string complex;
  int up_to = 0;
  bool passed = true;
  std::vector<HomotopyDegreeSummary> degrees;
  std::vector<std::string> failures;
  std::vector<std::string> bounds;
  ExtInt acyclicity_degree;
  bool operator==(const HomotopyCheckReport&) const = default;
};

void to_json(Json& j, const CheckItem& v);
void from_json(const Json& j, CheckItem& v);
void to_json(Json& j, const ValidateReport& v);
void from_json(const Json& j, ValidateReport& v);
void to_json(Json& j, const AnalyzeReport& v);
void from_json(const Json& j, AnalyzeReport& v);
void to_json(Json& j, const CheckSummary& v);
void from_json(const Json& j, CheckSummary& v);
void to_json(Json& j, const TheoremASummary& v);
void from_json(const Json& j, TheoremASummary& v);
void to_json(Json& j, const MemberSummary& v);
void from_json(const Json& j, MemberSummary& v);
void to_json(Json& j, const StabilityRowSummary& v);
void from_json(const Json& j, StabilityRowSummary& v);
void to_json(Json& j, const StabilityReport& v);
void from_json(const Json& j, StabilityReport& v);
void to_json(Json& j, const PageSummary& v);
void from_json(const Json& j, PageSummary& v);
void to_json(Json& j, const SequenceSummary& v);
void from_json(const Json& j, SequenceSummary& v);
void to_json(Json& j, const SpectralReport& v);
void from_json(const Json& j, SpectralReport& v);
void to_json(Json& j, const HomotopyDegreeSummary& v);
void from_json(const Json& j, HomotopyDegreeSummary& v);
void to_json(Json& j, const HomotopyCheckReport& v);
void from_json(const Json& j, HomotopyCheckReport& v);

/// Pretty-printed JSON with a trailing newline.
template <class Report>
std::string emit(const Report& r) {
  return Json(r).dump(2) + "\n";
}

template <class Report>
Report parse_report(const std::string& text) {
  return Json::parse(text).get<Report>();
}

}  // namespace qss::cli
