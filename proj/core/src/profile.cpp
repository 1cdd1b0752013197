#include <algorithm>
#include <cctype>
#include <sstream>

#include "qss/quillen.hpp"

namespace qss::quillen {

std::string to_string(const Extension& e) {
  switch (e.kind) {
    case Extension::Kind::None: return "none";
    case Extension::Kind::Constant: return "constant";
    case Extension::Kind::Infinity: return "infinity";
    case Extension::Kind::Affine:
      return "affine(" + std::to_string(e.slope) + "," + std::to_string(e.offset) + ")";
  }
  return "none";
}

Extension parse_extension(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "none") return Extension::none();
  if (s == "constant") return Extension::constant();
  if (s == "infinity" || s == "inf") return Extension::infinity();
  if (s.rfind("affine(", 0) == 0 && s.back() == ')') {
    const auto body = s.substr(7, s.size() - 8);
    const auto comma = body.find(',');
    if (comma != std::string::npos) {
      try {
        std::size_t a = 0, b = 0;
        const std::string ls = body.substr(0, comma), rs = body.substr(comma + 1);
        const long long slope = std::stoll(ls, &a);
        const long long offset = std::stoll(rs, &b);
        if (a == ls.size() && b == rs.size()) return Extension::affine(slope, offset);
      } catch (const std::exception&) {
      }
    }
  }
  throw std::invalid_argument("unknown extension rule '" + text + "'");
}

namespace {

ExtInt table_at(const std::vector<ExtInt>& table, const Extension& ext, const ExtInt& R, std::int64_t r,
                const char* name) {
  if (r < 0 || (R.is_finite() && r > R.value()))
    throw IndexOutOfRange(std::string(name) + "(" + std::to_string(r) + ") is outside [R]");
  if (static_cast<std::size_t>(r) < table.size()) return table[static_cast<std::size_t>(r)];
  switch (ext.kind) {
    case Extension::Kind::None: break;
    case Extension::Kind::Constant:
      if (!table.empty()) return table.back();
      break;
    case Extension::Kind::Affine: return ExtInt(ext.slope * r + ext.offset);
    case Extension::Kind::Infinity: return ExtInt::pos_inf();
  }
  throw IndexOutOfRange(std::string(name) + "(" + std::to_string(r) + ") is past the table and has no extension");
}

enum class Which { Gamma, Tau };

struct Dual {
  ExtInt value;
  int argmin = -1;
};

// No lower bound on r: the window rule makes every queried index nonnegative.
Dual dual_impl(const StabilityProfile& p, int q, std::int64_t r, Which which) {
  if (q < p.q0) return {ExtInt::pos_inf(), -1};
  if (r + 1 - 2 * static_cast<std::int64_t>(q - p.q0) < 0) return {ExtInt::neg_inf(), -1};
  Dual best{ExtInt::pos_inf(), -1};
  for (int j = p.q0; j <= q; ++j) {
    const std::int64_t idx = r + 1 - 2 * static_cast<std::int64_t>(q - j);
    const ExtInt v = (which == Which::Gamma ? p.gamma_at(idx) : p.tau_at(idx)) - j;
    if (best.argmin < 0 || v < best.value) best = {v, j};
  }
  return best;
}

ExtInt margin_impl(const StabilityProfile& p, int q, std::int64_t r) {
  return min(dual_impl(p, q, r, Which::Gamma).value, dual_impl(p, q, r, Which::Tau).value - 1);
}

void check_r(const StabilityProfile& p, std::int64_t r) {
  if (r < 0 || (p.R.is_finite() && r > p.R.value() - 1))
    throw IndexOutOfRange("index r = " + std::to_string(r) + " is outside [R-1]");
}

}  // namespace

ExtInt StabilityProfile::gamma_at(std::int64_t r) const { return table_at(gamma, gamma_ext, R, r, "gamma"); }
ExtInt StabilityProfile::tau_at(std::int64_t r) const { return table_at(tau, tau_ext, R, r, "tau"); }

void StabilityProfile::check() const {
  if (q0 < 1) throw std::invalid_argument("initial parameter q0 must be at least 1");
  if (R.is_neg_inf() || (R.is_finite() && R.value() < 0)) throw std::invalid_argument("R must be >= 0 or inf");
  if (R.is_finite()) {
    const auto need = static_cast<std::size_t>(R.value()) + 1;
    if (gamma.size() < need && gamma_ext.kind == Extension::Kind::None)
      throw std::invalid_argument("gamma table does not cover [R]");
    if (tau.size() < need && tau_ext.kind == Extension::Kind::None)
      throw std::invalid_argument("tau table does not cover [R]");
  }
  if ((gamma_ext.kind == Extension::Kind::Constant && gamma.empty()) ||
      (tau_ext.kind == Extension::Kind::Constant && tau.empty()))
    throw std::invalid_argument("constant extension needs a nonempty table");
}

StabilityProfile StabilityProfile::general_linear() {
  StabilityProfile p;
  p.R = ExtInt::pos_inf();
  p.q0 = 2;
  p.gamma_ext = Extension::infinity();
  p.tau_ext = Extension::affine(1, 0);
  return p;
}

StabilityProfile StabilityProfile::special_linear(int R) {
  if (R < 1) throw std::invalid_argument("special linear profile needs R >= 1");
  StabilityProfile p;
  p.R = ExtInt(R);
  p.q0 = 2;
  for (int r = 0; r <= R; ++r) {
    p.gamma.push_back(ExtInt::pos_inf());
    p.tau.push_back(ExtInt(r < R ? r : R - 1));
  }
  return p;
}

ExtInt dual_gamma(const StabilityProfile& p, int q, std::int64_t r) {
  check_r(p, r);
  return dual_impl(p, q, r, Which::Gamma).value;
}

ExtInt dual_tau(const StabilityProfile& p, int q, std::int64_t r) {
  check_r(p, r);
  return dual_impl(p, q, r, Which::Tau).value;
}

ExtInt margin(const StabilityProfile& p, int q, std::int64_t r) {
  check_r(p, r);
  return margin_impl(p, q, r);
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Isomorphism: return "isomorphism";
    case VerdictKind::Injection: return "injection";
    case VerdictKind::Unknown: return "unknown";
  }
  return "unknown";
}

std::string symbol(VerdictKind k) {
  switch (k) {
    case VerdictKind::Isomorphism: return "≅";
    case VerdictKind::Injection: return "↪";
    case VerdictKind::Unknown: return "?";
  }
  return "?";
}

Verdict verdict(const StabilityProfile& p, int q, std::int64_t r) {
  check_r(p, r);
  if (q < 0) throw std::invalid_argument("degree q must be nonnegative");
  Verdict v;
  v.q = q;
  v.r = r;
  if (q < p.q0) {
    v.kind = VerdictKind::Isomorphism;
    v.margin = ExtInt::pos_inf();
    v.binding = "initial";
    return v;
  }
  const Dual g = dual_impl(p, q, r, Which::Gamma);
  const Dual t = dual_impl(p, q, r, Which::Tau);
  v.margin = min(g.value, t.value - 1);
  if (g.argmin < 0) {
    v.binding = "window";
  } else if (g.value < t.value - 1) {
    v.binding = "gamma";
    v.witness_j = g.argmin;
  } else if (t.value - 1 < g.value) {
    v.binding = "tau";
    v.witness_j = t.argmin;
  } else {
    v.binding = "both";
    v.witness_j = g.argmin;
  }
  if (v.margin >= ExtInt(0)) {
    v.kind = VerdictKind::Isomorphism;
  } else if (margin_impl(p, q - 1, r) >= ExtInt(0)) {
    v.kind = VerdictKind::Injection;
  } else {
    v.kind = VerdictKind::Unknown;
  }
  return v;
}

StabilityTable stability_table(const StabilityProfile& p, int q_max, std::int64_t horizon) {
  StabilityTable table;
  std::int64_t last = p.R.is_finite() ? p.R.value() - 1 : horizon;
  // Stop where gamma or tau can no longer be evaluated at r+1.
  for (std::int64_t r = 0; r <= last + 1; ++r) {
    try {
      (void)p.gamma_at(r);
      (void)p.tau_at(r);
    } catch (const IndexOutOfRange&) {
      last = r - 2;
      break;
    }
  }
  last = std::max<std::int64_t>(last, -1);
  table.last_r = last;
  for (int q = 0; q <= q_max; ++q) {
    StabilityRow row;
    row.q = q;
    std::vector<VerdictKind> kinds;
    for (std::int64_t r = 0; r <= last; ++r) {
      const auto k = verdict(p, q, r).kind;
      kinds.push_back(k);
      if (k == VerdictKind::Isomorphism && !row.first_iso) row.first_iso = r;
    }
    for (std::int64_t r = last; r >= 0 && kinds[static_cast<std::size_t>(r)] == VerdictKind::Isomorphism; --r)
      row.stable_from = r;
    table.rows.push_back(row);
    table.grid.push_back(std::move(kinds));
  }
  return table;
}

LemmaReport check_lemma_combinatorics(const StabilityProfile& p, int q, std::int64_t r) {
  LemmaReport rep;
  check_r(p, r);
  rep.premise = q >= p.q0 && margin_impl(p, q, r) >= ExtInt(0);
  if (!rep.premise) return rep;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) rep.failures.push_back(what);
  };
  std::ostringstream at;
  at << " at (q,r)=(" << q << "," << r << ")";
  need(p.gamma_at(r + 1) >= ExtInt(q), "(i) gamma(r+1) < q" + at.str());
  need(p.tau_at(r + 1) >= ExtInt(q + 1), "(i) tau(r+1) < q+1" + at.str());
  need(margin_impl(p, q - 1, r) >= ExtInt(0), "(ii) condition fails at (q-1,r)" + at.str());
  for (int k = 0; k <= q - p.q0; ++k) {
    if (k % 2 == 1)
      need(margin_impl(p, q - k, r - k - 1) >= ExtInt(0),
           "(iii) condition fails at (q-p,r-p-1) for p=" + std::to_string(k) + at.str());
    else
      need(margin_impl(p, q - k - 1, r - k - 2) >= ExtInt(0),
           "(iv) condition fails at (q-p-1,r-p-2) for p=" + std::to_string(k) + at.str());
  }
  rep.passed = rep.failures.empty();
  return rep;
}

}  // namespace qss::quillen
