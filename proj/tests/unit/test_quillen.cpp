#include <doctest.h>

#include <algorithm>

#include "qss/errors.hpp"
#include "qss/quillen.hpp"
#include "support.hpp"

using namespace qss;
using quillen::StabilityProfile;
using quillen::VerdictKind;
using testing::Rng;

namespace {

// The dual ranges straight from their defining minimum.
ExtInt oracle_dual(const std::vector<ExtInt>& f, int q0, int q, std::int64_t r) {
  if (q < q0) return ExtInt::pos_inf();
  if (r + 1 - 2 * (q - q0) < 0) return ExtInt::neg_inf();
  ExtInt best = ExtInt::pos_inf();
  for (int j = q0; j <= q; ++j) best = std::min(best, f[static_cast<std::size_t>(r + 1 - 2 * (q - j))] - j);
  return best;
}

ExtInt oracle_margin(const StabilityProfile& p, int q, std::int64_t r) {
  return std::min(oracle_dual(p.gamma, p.q0, q, r), oracle_dual(p.tau, p.q0, q, r) - 1);
}

StabilityProfile symmetric_words_profile(int R) {
  StabilityProfile p;
  p.R = ExtInt(R);
  p.q0 = 1;
  for (int r = 0; r <= R; ++r) {
    p.gamma.push_back(ExtInt(r - 2));
    p.tau.push_back(ExtInt(r - 1));
  }
  return p;
}

}  // namespace

TEST_CASE("extensions parse and print") {
  CHECK(quillen::parse_extension("affine(2,-1)") == quillen::Extension::affine(2, -1));
  CHECK(quillen::parse_extension("infinity") == quillen::Extension::infinity());
  CHECK(quillen::to_string(quillen::Extension::affine(1, 0)) == "affine(1,0)");
  CHECK_THROWS_AS(quillen::parse_extension("affine(1)"), std::invalid_argument);
}

TEST_CASE("profiles check their tables") {
  StabilityProfile p;
  p.R = ExtInt(2);
  p.gamma = {0, 1};
  p.tau = {0, 1, 2};
  CHECK_THROWS_AS(p.check(), std::invalid_argument);
  p.gamma.push_back(2);
  CHECK_NOTHROW(p.check());
  p.q0 = 0;
  CHECK_THROWS_AS(p.check(), std::invalid_argument);
  CHECK_NOTHROW(StabilityProfile::general_linear().check());
  CHECK(StabilityProfile::general_linear().tau_at(17) == ExtInt(17));
  CHECK_THROWS_AS(StabilityProfile::special_linear(6).tau_at(7), IndexOutOfRange);
}

TEST_CASE("GL margin is r - (2q - 2)") {
  const auto gl = StabilityProfile::general_linear();
  for (int q = 2; q <= 8; ++q)
    for (std::int64_t r = 0; r <= 20; ++r) {
      if (r + 1 - 2 * (q - 2) < 0) {
        CHECK(quillen::margin(gl, q, r) == ExtInt::neg_inf());
        continue;
      }
      CHECK(quillen::margin(gl, q, r) == ExtInt(r - (2 * q - 2)));
    }
}

TEST_CASE("below q0 the dual ranges are infinite") {
  const auto gl = StabilityProfile::general_linear();
  for (std::int64_t r = 0; r < 5; ++r) {
    CHECK(quillen::dual_gamma(gl, 1, r) == ExtInt::pos_inf());
    CHECK(quillen::dual_tau(gl, 0, r) == ExtInt::pos_inf());
  }
}

TEST_CASE("SL margin at r = R - 1 follows the defining minimum") {
  // Terms j < q give R - 2q + j, the term j = q gives tau(R) - q = R - 1 - q.
  for (int R = 4; R <= 12; ++R) {
    const auto sl = StabilityProfile::special_linear(R);
    for (int q = 2; q <= 6; ++q) {
      if (R - 2 * (q - 2) < 0) continue;
      const std::int64_t expect = std::min(R - 2 * q + 2, R - q - 1) - 1;
      CHECK(quillen::margin(sl, q, R - 1) == ExtInt(expect));
      CHECK(quillen::margin(sl, q, R - 1) == oracle_margin(sl, q, R - 1));
      if (q >= 3) CHECK(expect == R - (2 * q - 1));
    }
    CHECK_THROWS_AS(quillen::margin(sl, 2, R), IndexOutOfRange);
  }
}

TEST_CASE("verdict examples") {
  const auto gl = StabilityProfile::general_linear();
  for (std::int64_t r = 0; r <= 10; ++r) {
    const auto v = quillen::verdict(gl, 3, r);
    if (r >= 4)
      CHECK(v.kind == VerdictKind::Isomorphism);
    else if (r >= 2)
      CHECK(v.kind == VerdictKind::Injection);
    else
      CHECK(v.kind == VerdictKind::Unknown);
    CHECK(quillen::verdict(gl, 0, r).kind == VerdictKind::Isomorphism);
    CHECK(quillen::verdict(gl, 0, r).binding == "initial");
  }
  // R = 2q - 2 sits one below the isomorphism threshold R >= 2q - 1.
  const auto sl = StabilityProfile::special_linear(6);
  CHECK(quillen::verdict(sl, 3, 5).kind == VerdictKind::Isomorphism);
  CHECK(quillen::verdict(sl, 4, 5).kind == VerdictKind::Injection);
  CHECK(quillen::verdict(sl, 4, 5).margin == ExtInt(-1));
  CHECK(quillen::verdict(sl, 5, 5).kind == VerdictKind::Unknown);
  CHECK(quillen::verdict(StabilityProfile::special_linear(7), 4, 6).kind == VerdictKind::Isomorphism);
}

TEST_CASE("verdict witnesses name the minimising j") {
  const auto gl = StabilityProfile::general_linear();
  const auto v = quillen::verdict(gl, 3, 6);
  CHECK(v.margin == ExtInt(2));
  CHECK(v.binding == "tau");
  CHECK(v.witness_j >= 2);
  CHECK(v.witness_j <= 3);
}

TEST_CASE("stability tables") {
  const auto gl = quillen::stability_table(StabilityProfile::general_linear(), 8, 30);
  for (int q = 3; q <= 8; ++q) {
    const auto& row = gl.rows[static_cast<std::size_t>(q)];
    REQUIRE(row.first_iso);
    CHECK(*row.first_iso == 2 * q - 2);
    REQUIRE(row.stable_from);
    CHECK(*row.stable_from == 2 * q - 2);
  }

  // Everything -inf: iso below q0, injection at q0, then nothing.
  StabilityProfile minus;
  minus.R = ExtInt(6);
  minus.q0 = 1;
  minus.gamma.assign(7, ExtInt::neg_inf());
  minus.tau.assign(7, ExtInt::neg_inf());
  const auto t = quillen::stability_table(minus, 4);
  CHECK(t.last_r == 5);
  for (std::int64_t r = 0; r <= 5; ++r) {
    CHECK(t.grid[0][static_cast<std::size_t>(r)] == VerdictKind::Isomorphism);
    CHECK(t.grid[1][static_cast<std::size_t>(r)] == VerdictKind::Injection);
    for (int q = 2; q <= 4; ++q) CHECK(t.grid[static_cast<std::size_t>(q)][static_cast<std::size_t>(r)] == VerdictKind::Unknown);
  }
  for (int q = 1; q <= 4; ++q) CHECK_FALSE(t.rows[static_cast<std::size_t>(q)].first_iso);
}

TEST_CASE("symmetric words profile: first iso matches the formula") {
  const auto p = symmetric_words_profile(30);
  const auto t = quillen::stability_table(p, 6);
  for (int q = 0; q <= 6; ++q) {
    std::optional<std::int64_t> expect;
    for (std::int64_t r = 0; r < 30 && !expect; ++r)
      if (q < p.q0 || oracle_margin(p, q, r) >= ExtInt(0)) expect = r;
    CHECK(t.rows[static_cast<std::size_t>(q)].first_iso == expect);
  }
}

TEST_CASE("lemma combinatorics") {
  const auto gl = StabilityProfile::general_linear();
  const auto rep = quillen::check_lemma_combinatorics(gl, 3, 4);
  CHECK(rep.premise);
  CHECK(rep.passed);
  const auto vacuous = quillen::check_lemma_combinatorics(gl, 3, 1);
  CHECK_FALSE(vacuous.premise);
  CHECK(vacuous.passed);
}

TEST_CASE("property: dual ranges and verdicts agree with the defining formulas") {
  Rng rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = testing::random_profile(rng);
    const auto R = p.R.value();
    for (int q = 0; q <= 6; ++q)
      for (std::int64_t r = 0; r < R; ++r) {
        CHECK(quillen::dual_gamma(p, q, r) == oracle_dual(p.gamma, p.q0, q, r));
        CHECK(quillen::dual_tau(p, q, r) == oracle_dual(p.tau, p.q0, q, r));
        const auto m = oracle_margin(p, q, r);
        const auto v = quillen::verdict(p, q, r);
        VerdictKind expect = VerdictKind::Unknown;
        if (q < p.q0 || m >= ExtInt(0))
          expect = VerdictKind::Isomorphism;
        else if (oracle_margin(p, q - 1, r) >= ExtInt(0))
          expect = VerdictKind::Injection;
        CHECK(v.kind == expect);
        // An isomorphism in degree q grants injectivity one degree up.
        if (v.kind == VerdictKind::Isomorphism) CHECK(quillen::verdict(p, q + 1, r).injective());
      }
  }
}

TEST_CASE("property: lemma consequences hold on 1000 random profiles") {
  Rng rng(67);
  std::size_t premises = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = testing::random_profile(rng);
    for (int q = p.q0; q <= 6; ++q)
      for (std::int64_t r = 0; r < p.R.value(); ++r) {
        const auto rep = quillen::check_lemma_combinatorics(p, q, r);
        CHECK(rep.premise == (oracle_margin(p, q, r) >= ExtInt(0)));
        CHECK(rep.passed);
        premises += rep.premise ? 1 : 0;
      }
  }
  CHECK(premises > 100);
}

TEST_CASE("property: stable_from is the start of the final run of isomorphisms") {
  Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testing::random_profile(rng);
    const auto t = quillen::stability_table(p, 5);
    for (int q = 0; q <= 5; ++q) {
      const auto& g = t.grid[static_cast<std::size_t>(q)];
      const auto& row = t.rows[static_cast<std::size_t>(q)];
      std::optional<std::int64_t> first, stable;
      for (std::int64_t r = 0; r <= t.last_r; ++r)
        if (g[static_cast<std::size_t>(r)] == VerdictKind::Isomorphism && !first) first = r;
      for (std::int64_t r = t.last_r; r >= 0 && g[static_cast<std::size_t>(r)] == VerdictKind::Isomorphism; --r) stable = r;
      CHECK(row.first_iso == first);
      CHECK(row.stable_from == stable);
    }
  }
}

TEST_CASE("symmetric family end to end") {
  const auto fam = quillen::symmetric_family(5);
  quillen::FamilyOptions opts;
  opts.q_max = 3;
  const auto rep = quillen::verify_family(fam, opts);
  CHECK(rep.passed);
  for (const auto& m : rep.members) {
    if (m.r < 2) continue;
    CHECK(m.gamma == ExtInt(m.r - 2));
    CHECK(m.gamma == testing::oracle_acyclicity(fam.actions[static_cast<std::size_t>(m.r)]->complex()));
    CHECK(m.tau == ExtInt(m.r - 1));
    for (std::size_t q = 0; q < m.stabilizer_orders.size(); ++q)
      CHECK(m.stabilizer_orders[q] == testing::factorial(m.r - static_cast<int>(q) - 1));
    CHECK(m.mq3.passed);
    CHECK(m.int_inclusion.passed);
  }
}

TEST_CASE("symmetric family with the row-filtration checks") {
  const auto fam = quillen::symmetric_family(3);
  quillen::FamilyOptions opts;
  opts.theorem_a = true;
  opts.q_max = 2;
  const auto rep = quillen::verify_family(fam, opts);
  CHECK(rep.passed);
  for (const auto& m : rep.members)
    if (m.r >= 2) {
      REQUIRE(m.theorem_a);
      CHECK(m.theorem_a->passed);
    }
}

TEST_CASE("a declared profile that disagrees is reported") {
  auto fam = quillen::symmetric_family(3);
  auto p = symmetric_words_profile(3);
  p.tau[3] = ExtInt(5);
  fam.declared = p;
  const auto rep = quillen::verify_family(fam);
  CHECK_FALSE(rep.passed);
  const bool reported = !rep.failures.empty() || std::any_of(rep.members.begin(), rep.members.end(),
                                                            [](const auto& m) { return !m.failures.empty(); });
  CHECK(reported);
}
