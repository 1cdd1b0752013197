#include <doctest.h>

#include <algorithm>
#include <set>

#include "qss/errors.hpp"
#include "qss/groupaction.hpp"
#include "qss/quillen.hpp"
#include "support.hpp"

using namespace qss;
using grp::ElementId;
using grp::FiniteGroup;
using grp::GroupAction;
using testing::Rng;

namespace {

std::shared_ptr<const GroupAction> words_action(int n) {
  auto g = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(n));
  auto x = std::make_shared<const ss::SemiSimplicialComplex>(ss::injective_words_complex(n));
  return std::make_shared<const GroupAction>(GroupAction::letter_action(g, x));
}

grp::Permutation random_permutation(Rng& rng, int n) {
  grp::Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// A random permutation group on n letters acting by letters on a complex
// whose vertex tuples use those letters.
std::shared_ptr<const GroupAction> random_letter_action(Rng& rng) {
  const int n = testing::uniform(rng, 1, 4);
  std::vector<grp::Permutation> gens;
  const int k = testing::uniform(rng, 0, 2);
  for (int i = 0; i < k; ++i) gens.push_back(random_permutation(rng, n));
  auto g = std::make_shared<const FiniteGroup>(FiniteGroup::from_permutations(gens, n));
  auto x = std::make_shared<const ss::SemiSimplicialComplex>(
      testing::uniform(rng, 0, 1) ? ss::injective_words_complex(n) : ss::product_complex(n, testing::uniform(rng, 0, 2)));
  return std::make_shared<const GroupAction>(GroupAction::letter_action(g, x));
}

}  // namespace

TEST_CASE("groups: construction and laws") {
  const auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.size() == 6);
  CHECK(s3.identity() == 0);
  CHECK(grp::check_group_laws(s3).passed);
  CHECK(FiniteGroup::trivial().size() == 1);
  const auto gen = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}}, 3);
  CHECK(gen.table() == s3.table());
  const auto c3 = FiniteGroup::from_permutations({{1, 2, 0}}, 3);
  CHECK(c3.size() == 3);
  for (ElementId a = 0; a < c3.size(); ++a) CHECK(c3.mul(a, c3.inv(a)) == c3.identity());

  // Z/2 by table, and tables that are not groups.
  CHECK(grp::check_group_laws(FiniteGroup::from_table({{0, 1}, {1, 0}})).passed);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), InvalidGroup);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 2}, {1, 0}}), InvalidGroup);
  CHECK_THROWS_AS(FiniteGroup::from_permutations({{0, 0, 1}}, 3), InvalidGroup);
  CHECK_THROWS(FiniteGroup::symmetric(8, 5040));
}

TEST_CASE("groups: a non-associative loop fails the laws") {
  // A Latin square with identity 0 that is not associative.
  const std::vector<std::vector<ElementId>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  const auto rep = grp::check_group_laws(FiniteGroup::from_table(loop));
  CHECK_FALSE(rep.passed);
}

TEST_CASE("groups: homomorphisms and embeddings") {
  const auto s2 = FiniteGroup::symmetric(2);
  const auto s3 = FiniteGroup::symmetric(3);
  const auto f = grp::extend_permutations(s2, s3);
  CHECK_FALSE(grp::homomorphism_defect(s2, s3, f));
  CHECK(grp::is_injective(f));
  grp::GroupMap bad{0, 3};
  // 3 is a 3-cycle in lexicographic order, so squaring it is not the identity.
  CHECK(grp::homomorphism_defect(s2, s3, bad));
  CHECK(grp::is_injective(bad));
  CHECK_FALSE(grp::is_injective({0, 0}));
}

TEST_CASE("orbit examples") {
  auto trivial = std::make_shared<const FiniteGroup>();
  auto circle = std::make_shared<const ss::SemiSimplicialComplex>(ss::boundary_simplex(2));
  const auto t = GroupAction::trivial_action(trivial, circle);
  CHECK(grp::orbits(t, 0).size() == 3);
  CHECK(grp::transitivity_degree(t) == ExtInt::neg_inf());

  const auto a = words_action(3);
  const auto o1 = grp::orbits(*a, 1);
  REQUIRE(o1.size() == 1);
  CHECK(o1[0].size() == 6);
  const auto o2 = grp::orbits(*a, 2);
  REQUIRE(o2.size() == 1);
  CHECK(o2[0].size() == 6);
}

TEST_CASE("transitivity examples") {
  CHECK(grp::transitivity_degree(*words_action(3)) == ExtInt(2));
  CHECK(grp::transitivity_degree(*words_action(4)) == ExtInt(3));
  auto s3 = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(3));
  auto prod = std::make_shared<const ss::SemiSimplicialComplex>(ss::product_complex(3, 2));
  // Pairs (a, a) and (a, b) are different orbits on level 1.
  CHECK(grp::transitivity_degree(GroupAction::letter_action(s3, prod)) == ExtInt(0));
}

TEST_CASE("actions: generator images and malformed input") {
  auto s3 = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(3));
  auto x = std::make_shared<const ss::SemiSimplicialComplex>(ss::injective_words_complex(3));
  const auto ref = GroupAction::letter_action(s3, x);
  const std::vector<ElementId> gens{*s3->find_permutation({1, 0, 2}), *s3->find_permutation({1, 2, 0})};
  std::vector<std::vector<std::vector<ss::SimplexId>>> images(3);
  for (int k = 0; k < 3; ++k)
    for (auto g : gens) {
      std::vector<ss::SimplexId> row;
      for (ss::SimplexId s = 0; s < x->level_size(k); ++s) row.push_back(ref.act(k, g, s));
      images[static_cast<std::size_t>(k)].push_back(row);
    }
  const auto built = GroupAction::from_generator_images(s3, x, gens, images);
  for (int k = 0; k < 3; ++k)
    for (ElementId g = 0; g < s3->size(); ++g)
      for (ss::SimplexId s = 0; s < x->level_size(k); ++s) CHECK(built.act(k, g, s) == ref.act(k, g, s));

  CHECK_THROWS_AS(GroupAction::from_generator_images(s3, x, {gens[0]}, {images[0], images[1], images[2]}),
                  InvalidAction);
  auto short_images = images;
  short_images[1][0].pop_back();
  CHECK_THROWS_AS(GroupAction::from_generator_images(s3, x, gens, short_images), InvalidAction);

  // Swapping two words on level 1 only breaks face equivariance.
  auto twisted = images;
  std::swap(twisted[1][0][0], twisted[1][0][1]);
  bool threw = false;
  try {
    CHECK_FALSE(grp::check_action(GroupAction::from_generator_images(s3, x, gens, twisted)).passed);
  } catch (const InvalidAction&) {
    threw = true;
  }
  CHECK_FALSE(threw);
}

TEST_CASE("generic flag examples") {
  const auto f3 = grp::generic_flag(words_action(3), 2);
  std::vector<std::size_t> sizes;
  for (const auto& h : f3.stabilizers) sizes.push_back(h.size());
  CHECK(sizes == std::vector<std::size_t>{2, 1, 1});
  CHECK(grp::check_int_inclusion(f3).passed);

  const auto f4 = grp::generic_flag(words_action(4), 3);
  sizes.clear();
  for (const auto& h : f4.stabilizers) sizes.push_back(h.size());
  CHECK(sizes == std::vector<std::size_t>{6, 2, 1, 1});
  CHECK(grp::check_int_inclusion(f4).passed);

  const auto f0 = grp::generic_flag(words_action(3), 0);
  CHECK(f0.w.empty());
  CHECK(f0.stabilizers.size() == 1);
  CHECK(grp::check_int_inclusion(f0).passed);

  CHECK_THROWS_AS(grp::generic_flag(words_action(3), 3), NotTransitiveEnough);
}

TEST_CASE("generic flag: w elements are minimal and valid") {
  const auto a = words_action(4);
  const auto f = grp::generic_flag(a, 3);
  const auto& x = a->complex();
  const auto& g = a->group();
  for (int q = 0; q < 3; ++q)
    for (int i = 0; i <= q + 1; ++i) {
      const auto target = x.face(q + 1, f.flag.simplices[static_cast<std::size_t>(q) + 1], i);
      const auto w = f.w[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)];
      CHECK(a->act(q, g.inv(w), f.flag.simplices[static_cast<std::size_t>(q)]) == target);
      for (ElementId v = 0; v < w; ++v) CHECK(a->act(q, g.inv(v), f.flag.simplices[static_cast<std::size_t>(q)]) != target);
    }
}

TEST_CASE("int inclusion: a corrupted w table fails at its (q,i)") {
  auto f = grp::generic_flag(words_action(4), 3);
  const auto& g = f.action->group();
  // Any element moving o_1 breaks the defining equation at (1, 0).
  for (ElementId c = 1; c < g.size(); ++c)
    if (f.action->act(1, c, f.flag.simplices[1]) != f.flag.simplices[1]) {
      f.w[1][0] = g.mul(f.w[1][0], c);
      break;
    }
  const auto rep = grp::check_int_inclusion(f);
  CHECK_FALSE(rep.passed);
  REQUIRE_FALSE(rep.failures.empty());
  CHECK(rep.failures.front().find("(1,0)") != std::string::npos);
}

TEST_CASE("mq3: symmetric family passes variant a and the induced b and c") {
  const auto fam = quillen::symmetric_family(5);
  for (int r = 2; r <= 5; ++r) {
    const auto& a = fam.actions[static_cast<std::size_t>(r)];
    const auto tau = grp::transitivity_degree(*a);
    REQUIRE(tau == ExtInt(r - 1));
    const auto f = grp::generic_flag(a, r - 1);
    const auto maps = grp::standard_mq3_maps(f, fam.tower, r);
    CHECK(grp::check_mq3(f, fam.tower, r, grp::Mq3Variant::A).passed);
    CHECK(grp::check_mq3(f, fam.tower, r, grp::Mq3Variant::B, maps).passed);
    CHECK(grp::check_mq3(f, fam.tower, r, grp::Mq3Variant::C, maps).passed);
    CHECK_THROWS_AS(grp::check_mq3(f, fam.tower, r, grp::Mq3Variant::B), MissingData);
  }
}

TEST_CASE("mq3: a w element that does not centralize fails variant a") {
  const auto fam = quillen::symmetric_family(4);
  auto f = grp::generic_flag(fam.actions[4], 3);
  const auto& g = f.action->group();
  // Replace w[0][0] by k w with k in H_0: still a valid w, but conjugation
  // by it no longer matches the embedding unless k centralizes w H_1 w^-1.
  bool replaced = false;
  for (auto k : f.stabilizers[0]) {
    const auto w = g.mul(k, f.w[0][0]);
    bool centralizes = true;
    for (auto h : f.stabilizers[1])
      centralizes = centralizes && g.conjugate(w, h) == g.conjugate(f.w[0][0], h);
    if (!centralizes) {
      f.w[0][0] = w;
      replaced = true;
      break;
    }
  }
  REQUIRE(replaced);
  CHECK(grp::check_int_inclusion(f).passed);
  CHECK_FALSE(grp::check_mq3(f, fam.tower, 4, grp::Mq3Variant::A).passed);
}

TEST_CASE("mq3: trivial family passes every variant") {
  auto one = std::make_shared<const FiniteGroup>();
  auto pt = std::make_shared<const ss::SemiSimplicialComplex>(ss::complex_from_tuples({{{0}}, {{0, 0}}}));
  auto a = std::make_shared<const GroupAction>(GroupAction::trivial_action(one, pt));
  grp::GroupTower tower{{one, one, one}, {{0}, {0}}};
  const auto f = grp::generic_flag(a, 1);
  const auto maps = grp::standard_mq3_maps(f, tower, 2);
  for (auto v : {grp::Mq3Variant::A, grp::Mq3Variant::B, grp::Mq3Variant::C})
    CHECK(grp::check_mq3(f, tower, 2, v, maps).passed);
}

TEST_CASE("property: equivariance, orbit-stabilizer and the orbit oracle") {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_letter_action(rng);
    const auto& x = a->complex();
    const auto& g = a->group();
    CHECK(grp::check_action(*a).passed);
    for (int k = 0; k <= x.top_level(); ++k) {
      for (ElementId e = 0; e < g.size(); ++e)
        for (ss::SimplexId s = 0; s < x.level_size(k); ++s)
          for (int i = 0; k > 0 && i <= k; ++i)
            CHECK(x.face(k, a->act(k, e, s), i) == a->act(k - 1, e, x.face(k, s, i)));
      const auto orbs = grp::orbits(*a, k);
      CHECK(orbs.size() == testing::oracle_orbit_count(*a, k));
      for (const auto& o : orbs)
        for (auto s : o) CHECK(o.size() * grp::stabilizer(*a, k, s).size() == g.size());
    }
    CHECK(grp::transitivity_degree(*a) == testing::oracle_transitivity(*a));
  }
}

TEST_CASE("property: generic flags satisfy the conjugation inclusion") {
  Rng rng(43);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const auto a = random_letter_action(rng);
    const auto t = grp::transitivity_degree(*a);
    if (!t.is_finite()) continue;
    for (int depth = 0; depth <= t.value(); ++depth) {
      const auto f = grp::generic_flag(a, depth);
      CHECK(ss::is_flag(a->complex(), f.flag));
      CHECK(grp::check_int_inclusion(f).passed);
      // With o_q = delta_0(o_{q+1}), the raw stabilizers are nested.
      for (std::size_t q = 0; q + 1 < f.stabilizers.size(); ++q) {
        const std::set<ElementId> hq(f.stabilizers[q].begin(), f.stabilizers[q].end());
        for (auto h : f.stabilizers[q + 1]) CHECK(hq.count(h) == 1);
      }
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("property: transitivity is monotone under supergroups") {
  Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::uniform(rng, 2, 4);
    auto x = std::make_shared<const ss::SemiSimplicialComplex>(ss::injective_words_complex(n));
    std::vector<grp::Permutation> gens{random_permutation(rng, n)};
    auto small = std::make_shared<const FiniteGroup>(FiniteGroup::from_permutations(gens, n));
    gens.push_back(random_permutation(rng, n));
    auto big = std::make_shared<const FiniteGroup>(FiniteGroup::from_permutations(gens, n));
    CHECK(grp::transitivity_degree(GroupAction::letter_action(small, x)) <=
          grp::transitivity_degree(GroupAction::letter_action(big, x)));
  }
}
