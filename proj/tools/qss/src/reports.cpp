#include "qss_cli/reports.hpp"

namespace qss::cli {

#define QSS_JSON(Type, ...)                                                                       \
  void to_json(Json& nlohmann_json_j, const Type& nlohmann_json_t) {                              \
    NLOHMANN_JSON_EXPAND(NLOHMANN_JSON_PASTE(NLOHMANN_JSON_TO, __VA_ARGS__))                       \
  }                                                                                               \
  void from_json(const Json& nlohmann_json_j, Type& nlohmann_json_t) {                            \
    NLOHMANN_JSON_EXPAND(NLOHMANN_JSON_PASTE(NLOHMANN_JSON_FROM, __VA_ARGS__))                     \
  }

QSS_JSON(CheckItem, kind, name, passed, failures)
QSS_JSON(ValidateReport, passed, items, problems)
QSS_JSON(AnalyzeReport, action, group_order, level_sizes, reduced_cohomology, gamma0, tau0, orbit_counts, flag,
         stabilizer_orders, notes)
QSS_JSON(CheckSummary, name, applicable, passed, covered_through, failures, notes)
QSS_JSON(TheoremASummary, passed, partial, gamma0, tau0, truncation, exact_through, checks, bottom_row)
QSS_JSON(MemberSummary, r, passed, gamma, tau, orbit_counts, stabilizer_orders, failures, notes, theorem_a)
QSS_JSON(StabilityRowSummary, q, first_iso, stable_from)
QSS_JSON(StabilityReport, source, name, R, q0, q_max, last_r, gamma, tau, verdicts, margins, rows, family_passed,
         members, failures)
QSS_JSON(PageSummary, r, dims, d_ranks)
QSS_JSON(SequenceSummary, filtration, num_p, num_q, exact_through, stable_page, pages, e_infinity, totals,
         consistency_failures)
QSS_JSON(SpectralReport, source, name, truncation, exact_through, sequences, total_cohomology, totals_agree,
         theorem_a, notes, passed)
QSS_JSON(HomotopyDegreeSummary, degree, identity_checked, identity_holds, bound_holds, max_column_norm,
         offending_simplex)
QSS_JSON(HomotopyCheckReport, name, complex, up_to, passed, degrees, failures, bounds, acyclicity_degree)

#undef QSS_JSON

TheoremASummary summarize(const spec::TheoremAReport& r) {
  TheoremASummary s;
  s.passed = r.passed;
  s.partial = r.partial;
  s.gamma0 = r.gamma0;
  s.tau0 = r.tau0;
  s.truncation = r.truncation;
  s.exact_through = r.exact_through;
  for (const auto& c : r.checks)
    s.checks.push_back({c.name, c.applicable, c.passed, c.covered_through, c.failures, c.notes});
  for (auto b : r.bottom_row) s.bottom_row.push_back(spec::to_string(b));
  return s;
}

StabilityReport stability_report(const quillen::StabilityProfile& p, const quillen::StabilityTable& t) {
  StabilityReport s;
  s.R = p.R;
  s.q0 = p.q0;
  s.q_max = static_cast<int>(t.rows.size()) - 1;
  s.last_r = t.last_r;
  for (std::int64_t r = 0; r <= t.last_r + 1; ++r) {
    try {
      s.gamma.push_back(p.gamma_at(r));
      s.tau.push_back(p.tau_at(r));
    } catch (const IndexOutOfRange&) {
      s.gamma.resize(s.tau.size());
      break;
    }
  }
  for (std::size_t q = 0; q < t.grid.size(); ++q) {
    std::vector<std::string> names;
    std::vector<ExtInt> margins;
    for (std::int64_t r = 0; r <= t.last_r; ++r) {
      names.push_back(quillen::to_string(t.grid[q][static_cast<std::size_t>(r)]));
      margins.push_back(quillen::margin(p, static_cast<int>(q), r));
    }
    s.verdicts.push_back(std::move(names));
    s.margins.push_back(std::move(margins));
    s.rows.push_back({t.rows[q].q, t.rows[q].first_iso, t.rows[q].stable_from});
  }
  return s;
}

SequenceSummary summarize(const spec::SpectralSequence& seq, int max_page) {
  SequenceSummary s;
  s.filtration = spec::to_string(seq.filtration);
  s.num_p = seq.num_p;
  s.num_q = seq.num_q;
  s.exact_through = seq.exact_through;
  s.stable_page = seq.stable_page;
  for (const auto& page : seq.pages) {
    if (page.r > max_page) break;
    PageSummary ps;
    ps.r = page.r;
    ps.dims = page.dims;
    for (const auto& col : page.d) {
      std::vector<std::size_t> ranks;
      for (const auto& m : col) ranks.push_back(m.is_zero() ? 0 : la::rank(m));
      ps.d_ranks.push_back(std::move(ranks));
    }
    s.pages.push_back(std::move(ps));
  }
  s.e_infinity = seq.e_infinity;
  s.totals = seq.e_infinity_totals();
  s.consistency_failures = spec::page_consistency_failures(seq);
  return s;
}

}  // namespace qss::cli
