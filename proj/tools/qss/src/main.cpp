#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "qss_cli/commands.hpp"
#include "qss_cli/render.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

std::size_t budget() {
  if (const char* s = std::getenv("QSS_BUDGET")) {
    const std::string text(s);
    const bool digits = !text.empty() && text.find_first_not_of("0123456789") == std::string::npos;
    if (!digits || text.find_first_not_of('0') == std::string::npos)
      std::cerr << "warning: ignoring QSS_BUDGET='" << text << "', using " << qss::spec::kDefaultBudget << '\n';
  }
  return qss::spec::budget_from_env();
}

template <class Report>
int print(const Report& r, bool json, bool passed) {
  std::cout << (json ? qss::cli::emit(r) : qss::cli::render(r));
  return passed ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for stability of semi-simplicial group actions"};
  app.require_subcommand(1);
  bool json = false;
  std::string file, name;

  auto command = [&](const char* cmd, const char* help, bool named, const char* what = "") {
    auto* sub = app.add_subcommand(cmd, help);
    sub->add_option("file", file, "project file")->required();
    if (named) sub->add_option("name", name, what)->required();
    sub->add_flag("--json", json, "machine-readable output");
    return sub;
  };

  auto* validate = command("validate", "validate every object in a project file", false);
  auto* analyze = command("analyze", "acyclicity, transitivity and generic flag of an action", true, "action");

  qss::cli::StabilityOptions st;
  auto* stability = command("stability", "verdict grid and r(q) table", true, "profile or family");
  stability->add_option("--qmax", st.q_max, "largest degree q")->capture_default_str();
  std::int64_t r_max = -1;
  stability->add_option("--rmax", r_max, "last r tabulated for infinite families");
  stability->add_flag("--theorem-a", st.theorem_a, "also check the spectral sequence of every family member");

  qss::cli::SpectralOptions sp;
  int max_p = -1, max_q = -1, max_total = -1;
  auto* spectral = command("spectral", "spectral sequence pages", true, "action or double complex");
  spectral->add_option("--max-p", max_p, "largest column p");
  spectral->add_option("--max-q", max_q, "largest row q");
  spectral->add_option("--max-total", max_total, "largest total degree");
  spectral->add_option("--pages", sp.pages, "last page to print")->capture_default_str();
  spectral->add_option("--filtration", sp.filtration, "both, horizontal or vertical")->capture_default_str();
  bool no_theorem_a = false;
  spectral->add_flag("--no-theorem-a", no_theorem_a, "skip the row-filtration checks");

  int up_to = -2;
  auto* homotopy = command("homotopy-check", "check a chain homotopy with l1 bounds", true, "homotopy");
  homotopy->add_option("--up-to", up_to, "check the homotopy identity through this degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    const auto project = qss::cli::load_project(file);
    if (validate->parsed()) {
      const auto r = qss::cli::run_validate(project);
      return print(r, json, r.passed);
    }
    if (analyze->parsed()) return print(qss::cli::run_analyze(project, name), json, true);
    if (stability->parsed()) {
      st.budget = budget();
      if (r_max >= 0) st.r_max = r_max;
      const auto r = qss::cli::run_stability(project, name, st);
      return print(r, json, r.family_passed.value_or(true));
    }
    if (spectral->parsed()) {
      if (max_p >= 0) sp.max_p = max_p;
      if (max_q >= 0) sp.max_q = max_q;
      if (max_total >= 0) sp.max_total = max_total;
      sp.theorem_a = !no_theorem_a;
      sp.budget = budget();
      const auto r = qss::cli::run_spectral(project, name, sp);
      return print(r, json, r.passed);
    }
    if (homotopy->parsed()) {
      const auto r =
          qss::cli::run_homotopy_check(project, name, up_to == -2 ? std::nullopt : std::optional<int>(up_to));
      return print(r, json, r.passed);
    }
  } catch (const qss::cli::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (const qss::cli::NameNotFound& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const qss::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kBadInput;
}
