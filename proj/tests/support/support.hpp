#pragma once

// Test-side oracles and generators. Oracles recompute from first principles
// (dense elimination written here, coboundaries rebuilt from face lists,
// orbits by brute force) so they share no code path with the engine.

#include <cstdint>
#include <random>
#include <vector>

#include "qss/exactla.hpp"
#include "qss/groupaction.hpp"
#include "qss/quillen.hpp"
#include "qss/semisimplicial.hpp"
#include "qss/spectral.hpp"

namespace qss::testing {

using Rng = std::mt19937_64;
using Dense = std::vector<std::vector<la::Rational>>;

int uniform(Rng& rng, int lo, int hi);

Dense dense_of(const la::RationalMatrix& m);
/// Plain Gauss-Jordan on a copy; first nonzero entry as pivot.
std::size_t oracle_rank(Dense m);
std::size_t oracle_rank(const la::RationalMatrix& m);

/// Reduced cohomology in degrees 0..top of the augmented function complex,
/// with coboundaries rebuilt from the face lists.
std::vector<std::size_t> oracle_reduced_cohomology(const ss::SemiSimplicialComplex& x);
/// Largest g with oracle_reduced_cohomology zero in 0..g (+inf / -inf).
ExtInt oracle_acyclicity(const ss::SemiSimplicialComplex& x);

/// Orbit count on a level by closure under all group elements.
std::size_t oracle_orbit_count(const grp::GroupAction& a, int level);
ExtInt oracle_transitivity(const grp::GroupAction& a);

/// Total cohomology in degrees 0..up_to, totalizing independently.
std::vector<std::size_t> oracle_total_cohomology(const spec::DoubleComplex& dc, int up_to);

/// A valid double complex: a sum of dots, squares and staircases with
/// coefficients in {-2..2}, mixed by signed permutations and elementary basis
/// changes that keep every entry in {-2..2}. Grid at most max_grid x
/// max_grid, cells of dimension at most max_dim.
spec::DoubleComplex random_double_complex(Rng& rng, int max_grid = 5, std::size_t max_dim = 3);

/// Finite profile with R in 1..12, q0 in 1..3, tables over [0, 12] with
/// sprinkled infinities.
quillen::StabilityProfile random_profile(Rng& rng);

std::size_t factorial(int n);

/// Rational cohomology of the finite subgroup H in degrees 0..up_to by rank
/// of the inhomogeneous cochain complex, built here from the group table.
std::vector<std::size_t> oracle_group_cohomology(const grp::FiniteGroup& g, const std::vector<grp::ElementId>& h,
                                                 int up_to);

}  // namespace qss::testing
