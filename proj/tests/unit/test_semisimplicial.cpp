#include <doctest.h>

#include <set>

#include "qss/errors.hpp"
#include "qss/semisimplicial.hpp"
#include "support.hpp"

using namespace qss;
using ss::SemiSimplicialComplex;
using testing::Rng;

namespace {

// Random tuple complex: a few random words at the top, closed under deletion.
SemiSimplicialComplex random_tuple_complex(Rng& rng) {
  const int letters = testing::uniform(rng, 1, 4);
  const int top = testing::uniform(rng, 0, 3);
  std::vector<std::set<ss::VertexTuple>> levels(static_cast<std::size_t>(top) + 1);
  const int seeds = testing::uniform(rng, 1, 5);
  for (int s = 0; s < seeds; ++s) {
    ss::VertexTuple t;
    for (int i = 0; i <= top; ++i) t.push_back(testing::uniform(rng, 0, letters - 1));
    levels.back().insert(t);
  }
  for (int k = top; k > 0; --k)
    for (const auto& t : levels[static_cast<std::size_t>(k)])
      for (std::size_t i = 0; i < t.size(); ++i) {
        auto f = t;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        levels[static_cast<std::size_t>(k) - 1].insert(f);
      }
  std::vector<std::vector<ss::VertexTuple>> out;
  for (const auto& l : levels) out.emplace_back(l.begin(), l.end());
  return ss::complex_from_tuples(out);
}

bool dd_zero(const la::CochainComplex& c) {
  for (std::size_t k = 0; k + 1 < c.differentials.size(); ++k)
    if (!(c.differentials[k + 1] * c.differentials[k]).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("validate examples") {
  CHECK(ss::validate(ss::full_simplex(2)).passed);
  CHECK(ss::validate(ss::injective_words_complex(4)).passed);

  // One triangle on the standard edges, but with its faces listed in the
  // wrong order.
  const auto good = ss::full_simplex(2);
  std::vector<std::vector<std::vector<ss::SimplexId>>> faces(3);
  for (int k = 0; k < 2; ++k)
    for (std::size_t s = 0; s < good.level_size(k); ++s) {
      const auto f = good.faces(k, s);
      faces[static_cast<std::size_t>(k)].emplace_back(f.begin(), f.end());
    }
  const auto tri = good.faces(2, 0);
  faces[2].push_back({tri[2], tri[0], tri[1]});
  const auto rep = ss::validate(SemiSimplicialComplex(faces));
  CHECK_FALSE(rep.passed);
  REQUIRE_FALSE(rep.issues.empty());
  CHECK(rep.issues.front().level == 2);
  CHECK(rep.issues.front().simplex == 0);
  CHECK(rep.issues.front().i == 0);
  CHECK(rep.issues.front().j == 1);
  CHECK(rep.issues.front().message.find("(i,j)=(0,1)") != std::string::npos);
}

TEST_CASE("validate reports structural defects without throwing") {
  // Wrong arity, dangling id, and a gap between levels.
  std::vector<std::vector<std::vector<ss::SimplexId>>> arity{{{}, {}}, {{0}}};
  CHECK_FALSE(ss::validate(SemiSimplicialComplex(arity)).passed);
  std::vector<std::vector<std::vector<ss::SimplexId>>> dangling{{{}}, {{0, 5}}};
  CHECK_FALSE(ss::validate(SemiSimplicialComplex(dangling)).passed);
  std::vector<std::vector<std::vector<ss::SimplexId>>> gap{{{}}, {}, {{0, 0, 0}}};
  CHECK_FALSE(ss::validate(SemiSimplicialComplex(gap)).passed);
  CHECK_THROWS_AS(ss::augmented_cochain_complex(SemiSimplicialComplex(dangling)), InvalidComplex);
}

TEST_CASE("product complex sizes") {
  CHECK(ss::product_complex(2, 1).level_sizes() == std::vector<std::size_t>{2, 4});
  CHECK(ss::product_complex(3, 2).level_sizes() == std::vector<std::size_t>{3, 9, 27});
  CHECK_THROWS_AS(ss::product_complex(0, 2), EmptyVertexSet);
  const auto x = ss::product_complex(3, 2);
  const auto id = x.find_tuple(2, {2, 0, 1});
  REQUIRE(id);
  CHECK(x.tuple(1, x.face(2, *id, 1)) == ss::VertexTuple{2, 1});
}

TEST_CASE("injective words sizes and acyclicity") {
  CHECK(ss::injective_words_complex(3).level_sizes() == std::vector<std::size_t>{3, 6, 6});
  CHECK(ss::injective_words_complex(4).level_sizes() == std::vector<std::size_t>{4, 12, 24, 24});
  const auto c = ss::augmented_cochain_complex(ss::injective_words_complex(3));
  CHECK(la::acyclicity_degree(c) == ExtInt(1));
  CHECK(testing::oracle_acyclicity(ss::injective_words_complex(3)) == ExtInt(1));
}

TEST_CASE("boundary simplex sizes and acyclicity") {
  CHECK(ss::boundary_simplex(2).level_sizes() == std::vector<std::size_t>{3, 3});
  CHECK(ss::boundary_simplex(3).level_sizes() == std::vector<std::size_t>{4, 6, 4});
  CHECK(la::acyclicity_degree(ss::augmented_cochain_complex(ss::boundary_simplex(2))) == ExtInt(0));
  CHECK(la::acyclicity_degree(ss::augmented_cochain_complex(ss::boundary_simplex(3))) == ExtInt(1));
}

TEST_CASE("augmented complex examples") {
  const auto point = ss::complex_from_tuples({{{0}}});
  const auto c = ss::augmented_cochain_complex(point);
  CHECK(c.first_degree == -1);
  CHECK(c.dims == std::vector<std::size_t>{1, 1});
  CHECK(c.differentials[0].at(0, 0) == 1);
  CHECK(la::cohomology(c) == std::vector<std::size_t>{0, 0});

  const auto circle = ss::augmented_cochain_complex(ss::boundary_simplex(2));
  CHECK(circle.dims == std::vector<std::size_t>{1, 3, 3});

  const auto prod = ss::product_complex(2, 3);
  const auto pc = ss::augmented_cochain_complex(prod);
  CHECK(la::acyclicity_degree(pc) >= ExtInt(2));
  CHECK(la::verify_l1_homotopy(pc, ss::cone_homotopy(prod, 0), 2).passed);
}

TEST_CASE("property: constructors validate and square to zero") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<SemiSimplicialComplex> all{ss::injective_words_complex(n), ss::boundary_simplex(n),
                                           ss::full_simplex(n)};
    for (int top = 0; top + n <= 6; ++top) all.push_back(ss::product_complex(n, top));
    for (const auto& x : all) {
      CHECK(ss::validate(x).passed);
      CHECK(dd_zero(ss::augmented_cochain_complex(x)));
    }
  }
}

TEST_CASE("property: random tuple complexes agree with the oracle") {
  Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const auto x = random_tuple_complex(rng);
    REQUIRE(ss::validate(x).passed);
    const auto c = ss::augmented_cochain_complex(x);
    CHECK(dd_zero(c));
    const auto dims = la::cohomology_dims(c);
    const auto oracle = testing::oracle_reduced_cohomology(x);
    CHECK(dims == oracle);
    CHECK(la::acyclicity_degree(c) == testing::oracle_acyclicity(x));
  }
}

TEST_CASE("property: face relation is strict and transitive") {
  Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const auto x = random_tuple_complex(rng);
    const int top = x.top_level();
    for (int a = 0; a <= top; ++a)
      for (ss::SimplexId s = 0; s < x.level_size(a); ++s) {
        CHECK_FALSE(ss::is_face(x, a, s, a, s));
        for (int b = a + 1; b <= top; ++b)
          for (ss::SimplexId t = 0; t < x.level_size(b); ++t) {
            CHECK_FALSE(ss::is_face(x, b, t, a, s));
            if (!ss::is_face(x, a, s, b, t)) continue;
            for (int c = b + 1; c <= top; ++c)
              for (ss::SimplexId u = 0; u < x.level_size(c); ++u)
                if (ss::is_face(x, b, t, c, u)) CHECK(ss::is_face(x, a, s, c, u));
          }
      }
  }
}

TEST_CASE("flags descend by single faces") {
  const auto x = ss::injective_words_complex(4);
  for (int i = 0; i <= 3; ++i) {
    const auto f = ss::descending_flag(x, 3, 5, std::min(i, 1));
    CHECK(f.simplices.size() == 4);
    CHECK(ss::is_flag(x, f));
    for (std::size_t q = 0; q + 1 < f.simplices.size(); ++q)
      CHECK(ss::is_face(x, static_cast<int>(q), f.simplices[q], static_cast<int>(q) + 1, f.simplices[q + 1]));
  }
  ss::Flag bad = ss::descending_flag(x, 2, 0);
  bad.simplices[0] = (bad.simplices[0] + 1) % 4;
  CHECK_FALSE(ss::is_flag(x, bad));
}

TEST_CASE("property: coning homotopies on product complexes have unit bounds") {
  for (int v = 1; v <= 3; ++v)
    for (int top = 0; top <= 3; ++top) {
      const auto x = ss::product_complex(v, top);
      for (int vertex = 0; vertex < v; ++vertex) {
        const auto h = ss::cone_homotopy(x, vertex);
        for (const auto& b : h.bounds) CHECK(b == 1);
        CHECK(la::verify_l1_homotopy(ss::augmented_cochain_complex(x), h, top - 1).passed);
      }
    }
}
