#include "qss_cli/render.hpp"

#include <algorithm>
#include <sstream>

namespace qss::cli {

namespace {

// Display width of UTF-8 text: continuation bytes take no column.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad_left(const std::string& s, std::size_t w) {
  const auto n = width(s);
  return n >= w ? s : std::string(w - n, ' ') + s;
}

// Right-aligned columns; the first row is the header.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (widths.size() <= c) widths.push_back(0);
      widths[c] = std::max(widths[c], width(row[c]));
    }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "  " : "") << pad_left(row[c], widths[c]);
    os << '\n';
  }
  return os.str();
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string opt(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

std::string verdict_symbol(const std::string& name) {
  if (name == "isomorphism") return "≅";
  if (name == "injection") return "↪";
  return "?";
}

void list(std::ostringstream& os, const char* head, const std::vector<std::string>& items) {
  for (const auto& s : items) os << "  " << head << ": " << s << '\n';
}

// q runs upwards, p to the right; '*' marks cells past the exact range.
std::string grid(const std::vector<std::vector<std::size_t>>& dims, int exact_through) {
  if (dims.empty() || dims[0].empty()) return "  (empty)\n";
  const int np = static_cast<int>(dims.size());
  const int nq = static_cast<int>(dims[0].size());
  std::vector<std::vector<std::string>> rows;
  for (int q = nq - 1; q >= 0; --q) {
    std::vector<std::string> row{"q=" + std::to_string(q)};
    for (int p = 0; p < np; ++p) {
      std::string cell = std::to_string(dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]);
      if (p + q > exact_through) cell += "*";
      row.push_back(cell);
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::string> foot{""};
  for (int p = 0; p < np; ++p) foot.push_back("p=" + std::to_string(p));
  rows.push_back(std::move(foot));
  std::string out;
  std::istringstream lines(table(rows));
  for (std::string line; std::getline(lines, line);) out += "  " + line + "\n";
  return out;
}

void theorem_a(std::ostringstream& os, const TheoremASummary& t) {
  os << "row-filtration checks (gamma0 = " << t.gamma0 << ", tau0 = " << t.tau0 << ", truncation "
     << t.truncation << ", exact through " << t.exact_through << (t.partial ? ", partial" : "")
     << "): " << (t.passed ? "PASS" : "FAIL") << '\n';
  for (const auto& c : t.checks) {
    os << "  " << c.name << ": " << (!c.applicable ? "n/a" : c.passed ? "pass" : "FAIL");
    if (c.covered_through >= 0) os << " (through " << c.covered_through << ")";
    os << '\n';
    for (const auto& f : c.failures) os << "    failure: " << f << '\n';
    for (const auto& n : c.notes) os << "    note: " << n << '\n';
  }
  if (!t.bottom_row.empty()) {
    os << "  d_1 bottom row:";
    for (std::size_t p = 0; p < t.bottom_row.size(); ++p) os << ' ' << p << ':' << t.bottom_row[p];
    os << '\n';
  }
}

}  // namespace

std::string render(const ValidateReport& r) {
  std::ostringstream os;
  for (const auto& item : r.items) {
    os << (item.passed ? "ok    " : "FAIL  ") << item.kind << " '" << item.name << "'\n";
    for (const auto& f : item.failures) os << "      " << f << '\n';
  }
  for (const auto& p : r.problems) os << "FAIL  " << p << '\n';
  os << (r.passed ? "valid" : "invalid") << '\n';
  return os.str();
}

std::string render(const AnalyzeReport& r) {
  std::ostringstream os;
  os << "action " << r.action << ": group of order " << r.group_order << '\n';
  os << "level sizes:        " << join(r.level_sizes) << '\n';
  os << "reduced cohomology: " << join(r.reduced_cohomology) << '\n';
  os << "gamma0 (acyclicity):   " << r.gamma0 << '\n';
  os << "tau0 (transitivity):   " << r.tau0 << '\n';
  os << "orbits per level:      " << join(r.orbit_counts) << '\n';
  if (!r.flag.empty()) {
    os << "generic flag:          " << join(r.flag) << '\n';
    os << "stabilizer orders:     " << join(r.stabilizer_orders) << '\n';
  }
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  return os.str();
}

std::string render(const StabilityReport& r) {
  std::ostringstream os;
  os << r.source << ' ' << r.name << ": R = " << r.R << ", q0 = " << r.q0 << '\n';
  if (r.last_r < 0) {
    os << "no link r in range\n";
  } else {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"r\\q"};
    for (int q = 0; q <= r.q_max; ++q) head.push_back(std::to_string(q));
    rows.push_back(std::move(head));
    for (std::int64_t k = 0; k <= r.last_r; ++k) {
      std::vector<std::string> row{std::to_string(k)};
      for (const auto& col : r.verdicts) row.push_back(verdict_symbol(col[static_cast<std::size_t>(k)]));
      rows.push_back(std::move(row));
    }
    os << table(rows) << '\n';
  }
  std::vector<std::vector<std::string>> rq{{"q", "r(q)", "first iso"}};
  for (const auto& row : r.rows) rq.push_back({std::to_string(row.q), opt(row.stable_from), opt(row.first_iso)});
  os << table(rq);
  if (r.family_passed) {
    os << '\n';
    for (const auto& m : r.members) {
      os << "X(" << m.r << "): gamma = " << m.gamma << ", tau = " << m.tau << ", orbits [" << join(m.orbit_counts)
         << "], stabilizers [" << join(m.stabilizer_orders) << "] " << (m.passed ? "ok" : "FAIL") << '\n';
      list(os, "failure", m.failures);
      list(os, "note", m.notes);
      if (m.theorem_a) {
        std::ostringstream t;
        theorem_a(t, *m.theorem_a);
        std::istringstream lines(t.str());
        for (std::string line; std::getline(lines, line);) os << "  " << line << '\n';
      }
    }
    for (const auto& f : r.failures) os << "failure: " << f << '\n';
    os << "family " << (*r.family_passed ? "verified" : "FAILED") << '\n';
  }
  return os.str();
}

std::string render(const SpectralReport& r) {
  std::ostringstream os;
  os << r.source << ' ' << r.name;
  if (r.truncation >= 0) os << ", truncated at total degree " << r.truncation;
  os << ", exact through " << r.exact_through << '\n';
  for (const auto& s : r.sequences) {
    os << '\n' << s.filtration << " filtration (" << s.num_p << " x " << s.num_q << ")\n";
    for (const auto& page : s.pages) {
      os << "E_" << page.r << ":\n" << grid(page.dims, s.exact_through);
    }
    os << "E_inf (stable from page " << s.stable_page << "):\n" << grid(s.e_infinity, s.exact_through);
    os << "E_inf totals: " << join(s.totals) << '\n';
    list(os, "inconsistent", s.consistency_failures);
  }
  if (!r.total_cohomology.empty())
    os << "\ntotal cohomology: " << join(r.total_cohomology) << (r.totals_agree ? " (agrees)" : " (DISAGREES)")
       << '\n';
  if (r.theorem_a) {
    os << '\n';
    theorem_a(os, *r.theorem_a);
  }
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  return os.str();
}

std::string render(const HomotopyCheckReport& r) {
  std::ostringstream os;
  os << "homotopy " << r.name << " on " << r.complex << ", identity checked through degree " << r.up_to << '\n';
  std::vector<std::vector<std::string>> rows{{"k", "identity", "max |h_k col|_1", "C_k", "bound"}};
  for (const auto& d : r.degrees) {
    const auto idx = static_cast<std::size_t>(d.degree - r.degrees.front().degree);
    rows.push_back({std::to_string(d.degree), !d.identity_checked ? "-" : d.identity_holds ? "ok" : "FAIL",
                    d.max_column_norm, idx < r.bounds.size() ? r.bounds[idx] : "-",
                    d.bound_holds ? "ok" : "FAIL at " + std::to_string(d.offending_simplex.value_or(0))});
  }
  os << table(rows);
  for (const auto& f : r.failures) os << "failure: " << f << '\n';
  os << "acyclicity degree of the complex: " << r.acyclicity_degree << '\n';
  os << (r.passed ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace qss::cli
