#pragma once

// Stability profiles with extended-integer ranges, the dual range functions,
// isomorphism / injection verdicts, stability tables, the combinatorial
// consequences of the stability condition and end-to-end family checks.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qss/ext_int.hpp"
#include "qss/groupaction.hpp"
#include "qss/spectral.hpp"

namespace qss::quillen {

/// How a range function continues past its table.
struct Extension {
  enum class Kind { None, Constant, Affine, Infinity };
  Kind kind = Kind::None;
  std::int64_t slope = 0;
  std::int64_t offset = 0;

  static Extension none() { return {}; }
  static Extension constant() { return {Kind::Constant, 0, 0}; }
  static Extension affine(std::int64_t slope, std::int64_t offset) { return {Kind::Affine, slope, offset}; }
  static Extension infinity() { return {Kind::Infinity, 0, 0}; }
  bool operator==(const Extension&) const = default;
};
std::string to_string(const Extension& e);
/// "none", "constant", "infinity" or "affine(slope,offset)".
Extension parse_extension(const std::string& s);

struct StabilityProfile {
  /// Index range [R] = 0..R; +inf for infinite families.
  ExtInt R = ExtInt(0);
  int q0 = 1;
  std::vector<ExtInt> gamma;
  std::vector<ExtInt> tau;
  Extension gamma_ext;
  Extension tau_ext;

  /// Table value or extension; throws IndexOutOfRange past R or past the
  /// table when there is no extension rule.
  ExtInt gamma_at(std::int64_t r) const;
  ExtInt tau_at(std::int64_t r) const;
  /// Throws std::invalid_argument on q0 < 1, negative or missing R, or
  /// tables that do not cover [R] for finite R without extension.
  void check() const;

  /// gamma = inf, tau(r) = r, q0 = 2, R = inf.
  static StabilityProfile general_linear();
  /// gamma = inf, tau(r) = r for r < R, tau(R) = R - 1, q0 = 2.
  static StabilityProfile special_linear(int R);
};

/// min_{j=q0..q} gamma(r+1-2(q-j)) - j; -inf when r+1-2(q-q0) < 0; +inf for
/// q < q0. Throws IndexOutOfRange for r outside [R-1].
ExtInt dual_gamma(const StabilityProfile& p, int q, std::int64_t r);
ExtInt dual_tau(const StabilityProfile& p, int q, std::int64_t r);
/// min{dual_gamma, dual_tau - 1}.
ExtInt margin(const StabilityProfile& p, int q, std::int64_t r);

enum class VerdictKind { Isomorphism, Injection, Unknown };
std::string to_string(VerdictKind k);
/// Table symbol: iso, injection, unknown.
std::string symbol(VerdictKind k);

struct Verdict {
  int q = 0;
  std::int64_t r = 0;
  VerdictKind kind = VerdictKind::Unknown;
  ExtInt margin;
  /// Minimising j of the binding function, -1 when none.
  int witness_j = -1;
  /// "gamma", "tau", "both", "initial" (q < q0) or "window" (window below 0).
  std::string binding;
  bool injective() const { return kind != VerdictKind::Unknown; }
};

/// Isomorphism when q < q0 or margin(q,r) >= 0; else Injection when
/// margin(q-1,r) >= 0; else Unknown.
Verdict verdict(const StabilityProfile& p, int q, std::int64_t r);

struct StabilityRow {
  int q = 0;
  /// Least r with an Isomorphism verdict.
  std::optional<std::int64_t> first_iso;
  /// Least r0 with Isomorphism at every r in [r0, last_r].
  std::optional<std::int64_t> stable_from;
};

struct StabilityTable {
  std::int64_t last_r = -1;
  std::vector<StabilityRow> rows;
  /// grid[q][r] for r = 0..last_r.
  std::vector<std::vector<VerdictKind>> grid;
};

/// Rows q = 0..q_max over r = 0..R-1, or 0..horizon when R is infinite (cut
/// short where the tables and extensions stop).
StabilityTable stability_table(const StabilityProfile& p, int q_max, std::int64_t horizon = 64);

struct LemmaReport {
  bool premise = false;
  bool passed = true;
  std::vector<std::string> failures;
};

/// Checks consequences (i)-(iv) of margin(q,r) >= 0 with q >= q0; returns a
/// vacuous report when the premise fails.
LemmaReport check_lemma_combinatorics(const StabilityProfile& p, int q, std::int64_t r);

struct QuillenFamily {
  /// G_0..G_R with embeddings iota_r : G_r -> G_{r+1}.
  grp::GroupTower tower;
  /// X(r) with its G_r-action, r = 0..R.
  std::vector<std::shared_ptr<const grp::GroupAction>> actions;
  grp::Mq3Variant variant = grp::Mq3Variant::A;
  /// Per member maps for variants b and c; absent members use the maps
  /// induced by the tower.
  std::vector<std::optional<grp::Mq3Maps>> maps;
  int q0 = 1;
  std::optional<StabilityProfile> declared;

  int R() const { return static_cast<int>(actions.size()) - 1; }
};

/// S_0 < S_1 < ... < S_R acting on injective words in r letters (X(0) is the
/// empty complex), embedded by fixing the last letter.
QuillenFamily symmetric_family(int R);

struct MemberReport {
  int r = 0;
  ExtInt gamma;
  ExtInt tau;
  std::vector<std::size_t> orbit_counts;
  std::vector<std::size_t> stabilizer_orders;
  std::vector<std::size_t> expected_orders;
  grp::CheckReport int_inclusion;
  grp::CheckReport mq3;
  std::optional<spec::TheoremAReport> theorem_a;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool passed = true;
};

struct FamilyOptions {
  bool theorem_a = false;
  std::size_t budget = spec::kDefaultBudget;
  int q_max = 6;
};

struct FamilyReport {
  bool passed = true;
  std::vector<MemberReport> members;
  std::vector<std::string> failures;
  StabilityProfile profile;
  StabilityTable table;
};

/// Computes gamma and tau per member, builds generic flags, checks the
/// w-conjugation inclusion, the embeddings and the declared compatibility
/// variant, compares with a declared profile, and tabulates verdicts from the
/// computed profile. Failures are collected, never thrown.
FamilyReport verify_family(const QuillenFamily& fam, const FamilyOptions& opts = {});

}  // namespace qss::quillen
