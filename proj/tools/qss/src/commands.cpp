#include "qss_cli/commands.hpp"

#include <algorithm>

namespace qss::cli {

namespace {

std::vector<std::string> issue_messages(const ss::ValidationReport& v) {
  std::vector<std::string> out;
  for (const auto& i : v.issues) out.push_back(i.message);
  return out;
}

// Both names declared in different sections is ambiguous on the command line.
void require_unique(const Project& p, const std::string& name, const std::string& a, const std::string& b) {
  if (p.declares(a, name) && p.declares(b, name))
    throw UsageError("'" + name + "' names both a " + a + " entry and a " + b + " entry");
}

}  // namespace

ValidateReport run_validate(const Project& p) {
  ValidateReport rep;
  auto add = [&](CheckItem item) {
    item.passed = item.failures.empty();
    rep.passed = rep.passed && item.passed;
    rep.items.push_back(std::move(item));
  };
  for (const auto& [name, g] : p.groups) add({"group", name, true, grp::check_group_laws(*g).failures});
  for (const auto& [name, x] : p.complexes) add({"complex", name, true, issue_messages(ss::validate(*x))});
  for (const auto& [name, a] : p.actions) {
    CheckItem item{"action", name, true, grp::check_action(*a).failures};
    if (a->group().size() == 0) item.failures.push_back("empty group");
    add(std::move(item));
  }
  for (const auto& [name, _] : p.profiles) add({"profile", name, true, {}});
  for (const auto& [name, fam] : p.families) {
    CheckItem item{"family", name, true, {}};
    for (std::size_t r = 0; r < fam.tower.iota.size() && r + 1 < fam.tower.groups.size(); ++r) {
      const auto& f = fam.tower.iota[r];
      if (grp::homomorphism_defect(*fam.tower.groups[r], *fam.tower.groups[r + 1], f))
        item.failures.push_back("iota_" + std::to_string(r) + " is not a homomorphism");
      else if (!grp::is_injective(f))
        item.failures.push_back("iota_" + std::to_string(r) + " is not injective");
    }
    add(std::move(item));
  }
  for (const auto& [name, _] : p.double_complexes) add({"double complex", name, true, {}});
  for (const auto& [name, _] : p.homotopies) add({"homotopy", name, true, {}});
  rep.problems = p.problems;
  rep.passed = rep.passed && rep.problems.empty();
  return rep;
}

AnalyzeReport run_analyze(const Project& p, const std::string& name) {
  const auto& a = p.action(name);
  const auto& x = a->complex();
  AnalyzeReport rep;
  rep.action = name;
  rep.group_order = a->group().size();
  rep.level_sizes = x.level_sizes();
  const auto aug = ss::augmented_cochain_complex(x);
  rep.reduced_cohomology = la::cohomology_dims(aug);
  rep.gamma0 = la::acyclicity_degree(aug);
  rep.tau0 = grp::transitivity_degree(*a);
  for (int k = 0; k <= x.top_level(); ++k) rep.orbit_counts.push_back(grp::orbits(*a, k).size());
  if (rep.gamma0.is_pos_inf() && x.top_level() >= 0)
    rep.notes.push_back("no cohomology through the top level " + std::to_string(x.top_level()) +
                        ", the only degrees the complex has");
  if (rep.tau0.is_finite()) {
    const auto flag = grp::generic_flag(a, static_cast<int>(rep.tau0.value()));
    rep.flag.assign(flag.flag.simplices.begin(), flag.flag.simplices.end());
    for (const auto& h : flag.stabilizers) rep.stabilizer_orders.push_back(h.size());
  } else {
    rep.notes.push_back("level 0 is not a single orbit; there is no generic flag");
  }
  return rep;
}

StabilityReport run_stability(const Project& p, const std::string& name, const StabilityOptions& opts) {
  require_unique(p, name, "profiles", "families");
  if (opts.q_max < 0) throw UsageError("--qmax must be nonnegative");
  if (opts.r_max && *opts.r_max < 0) throw UsageError("--rmax must be nonnegative");
  const std::int64_t horizon = opts.r_max.value_or(std::max(20, 4 * opts.q_max));
  if (p.declares("profiles", name)) {
    const auto& prof = p.profile(name);
    auto rep = stability_report(prof, quillen::stability_table(prof, opts.q_max, horizon));
    rep.source = "profile";
    rep.name = name;
    return rep;
  }
  const auto& fam = p.family(name);
  quillen::FamilyOptions fo;
  fo.q_max = opts.q_max;
  fo.theorem_a = opts.theorem_a;
  fo.budget = opts.budget;
  const auto fr = quillen::verify_family(fam, fo);
  auto rep = stability_report(fr.profile, fr.table);
  rep.source = "family";
  rep.name = name;
  rep.family_passed = fr.passed;
  rep.failures = fr.failures;
  for (const auto& m : fr.members) {
    MemberSummary s;
    s.r = m.r;
    s.passed = m.passed;
    s.gamma = m.gamma;
    s.tau = m.tau;
    s.orbit_counts = m.orbit_counts;
    s.stabilizer_orders = m.stabilizer_orders;
    s.failures = m.failures;
    s.notes = m.notes;
    if (m.theorem_a) s.theorem_a = summarize(*m.theorem_a);
    rep.members.push_back(std::move(s));
  }
  return rep;
}

namespace {

std::vector<spec::Filtration> filtrations(const std::string& which) {
  if (which == "both") return {spec::Filtration::Vertical, spec::Filtration::Horizontal};
  try {
    return {spec::parse_filtration(which)};
  } catch (const std::exception&) {
    throw UsageError("--filtration must be both, horizontal or vertical, not '" + which + "'");
  }
}

void add_sequences(SpectralReport& rep, const spec::DoubleComplex& dc, const SpectralOptions& opts) {
  rep.exact_through = dc.exact_through();
  rep.total_cohomology = spec::total_cohomology(dc, rep.exact_through);
  for (auto f : filtrations(opts.filtration)) {
    const auto seq = spec::spectral_sequence(dc, f, opts.pages);
    auto s = summarize(seq, opts.pages);
    const bool agree = s.totals == rep.total_cohomology;
    rep.totals_agree = rep.totals_agree && agree;
    rep.passed = rep.passed && agree && s.consistency_failures.empty();
    rep.sequences.push_back(std::move(s));
  }
}

}  // namespace

SpectralReport run_spectral(const Project& p, const std::string& name, const SpectralOptions& opts) {
  require_unique(p, name, "actions", "double_complexes");
  if (opts.pages < 1) throw UsageError("--pages must be at least 1");
  for (const auto& v : {opts.max_p, opts.max_q, opts.max_total})
    if (v && *v < 0) throw UsageError("grid limits must be nonnegative");
  SpectralReport rep;
  rep.name = name;

  if (p.declares("double_complexes", name)) {
    rep.source = "double_complex";
    auto dc = p.double_complex(name);
    add_sequences(rep, dc, opts);
    if (opts.max_p || opts.max_q || opts.max_total)
      rep.notes.push_back("grid limits apply to group actions only; the stored double complex is used as given");
    return rep;
  }

  rep.source = "action";
  const auto& a = p.action(name);
  const auto& x = a->complex();
  const int top = x.top_level();
  const auto aug = ss::augmented_cochain_complex(x);
  const ExtInt gamma0 = la::acyclicity_degree(aug);
  const ExtInt tau0 = grp::transitivity_degree(*a);

  // Same default range as the row-filtration checks; flags can only shrink it.
  int want = 1;
  if (gamma0.is_finite()) want = std::max<int>(want, static_cast<int>(gamma0.value()) + 2);
  if (gamma0.is_pos_inf()) want = std::max(want, top + 2);
  if (tau0.is_finite()) want = std::max<int>(want, static_cast<int>(tau0.value()) + 2);
  int T = opts.max_total.value_or(want);
  if (opts.max_p) T = std::min(T, *opts.max_p);
  if (opts.max_q && *opts.max_q < top + 1) T = std::min(T, *opts.max_q);
  const bool explicit_range = opts.max_total || opts.max_p || opts.max_q;

  std::optional<spec::DoubleComplex> dc;
  for (int t = T; t >= 0 && !dc; --t) {
    try {
      dc = spec::build_group_double_complex(*a, t, std::max(0, std::min(t, top + 1)), t, opts.budget);
      rep.truncation = t;
    } catch (const BudgetExceeded&) {
      if (explicit_range) throw;
    }
  }
  if (!dc) throw BudgetExceeded("budget " + std::to_string(opts.budget) + " admits no cell of the double complex");
  if (rep.truncation < T)
    rep.notes.push_back("truncated at total degree " + std::to_string(rep.truncation) + " instead of " +
                        std::to_string(T) + " to fit the budget");
  add_sequences(rep, *dc, opts);

  if (!opts.theorem_a) return rep;
  if (x.level_size(0) == 0) {
    rep.notes.push_back("empty complex: the row-filtration checks do not apply");
  } else if (!tau0.is_finite()) {
    rep.notes.push_back("level 0 is not a single orbit: the row-filtration checks need a generic flag");
  } else {
    const auto flag = grp::generic_flag(a, static_cast<int>(tau0.value()));
    const auto t = spec::verify_theorem_A(flag, gamma0, tau0, opts.budget);
    rep.theorem_a = summarize(t);
    rep.passed = rep.passed && t.passed;
  }
  return rep;
}

HomotopyCheckReport run_homotopy_check(const Project& p, const std::string& name, std::optional<int> up_to) {
  const auto& h = p.homotopy(name);
  const auto& x = p.complex(h.complex);
  const auto cochain = ss::augmented_cochain_complex(*x);
  HomotopyCheckReport rep;
  rep.name = name;
  rep.complex = h.complex;
  rep.up_to = up_to.value_or(h.up_to);
  const auto r = la::verify_l1_homotopy(cochain, h.homotopy, rep.up_to);
  rep.passed = r.passed;
  rep.failures = r.failures;
  for (const auto& d : r.degrees)
    rep.degrees.push_back({d.degree, d.degree <= rep.up_to, d.identity_holds, d.bound_holds,
                           la::format_rational(d.max_column_norm), d.offending_simplex});
  for (const auto& b : h.homotopy.bounds) rep.bounds.push_back(la::format_rational(b));
  rep.acyclicity_degree = la::acyclicity_degree(cochain);
  return rep;
}

}  // namespace qss::cli
