#pragma once

// Finite semi-simplicial sets (Delta-complexes): storage, validation of the
// face identity, the face relation and flags, standard constructors and the
// augmented cochain complex of rational functions on simplices.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qss/exactla.hpp"

namespace qss::ss {

using SimplexId = std::uint32_t;
using VertexTuple = std::vector<int>;

/// Simplices are opaque ids per level. Level k >= 1 stores for each simplex
/// the list of its k+1 faces (entry i is delta_i). The augmentation level -1
/// is a single implicit point and is never stored.
///
/// Constructors that build complexes out of vertex tuples keep the tuple of
/// every simplex as its label, which group actions by letter permutation use.
class SemiSimplicialComplex {
 public:
  SemiSimplicialComplex() = default;

  /// faces[k][s] lists the faces of simplex s at level k; faces[0] holds empty
  /// lists. Structural problems are left for validate() to report.
  SemiSimplicialComplex(std::vector<std::vector<std::vector<SimplexId>>> faces,
                        std::vector<std::vector<VertexTuple>> tuples = {});

  /// Number of stored levels (top_level() + 1 when nonempty).
  std::size_t num_levels() const { return faces_.size(); }
  /// Highest nonempty level, -1 for the empty complex.
  int top_level() const;
  std::size_t level_size(int level) const;
  std::vector<std::size_t> level_sizes() const;

  std::span<const SimplexId> faces(int level, SimplexId s) const;
  SimplexId face(int level, SimplexId s, int i) const { return faces(level, s)[static_cast<std::size_t>(i)]; }

  bool has_tuples() const { return !tuples_.empty(); }
  const VertexTuple& tuple(int level, SimplexId s) const;
  std::optional<SimplexId> find_tuple(int level, const VertexTuple& t) const;
  /// Tuple label when present, else "level:id".
  std::string label(int level, SimplexId s) const;

 private:
  std::vector<std::vector<std::vector<SimplexId>>> faces_;
  std::vector<std::vector<VertexTuple>> tuples_;
  std::vector<std::map<VertexTuple, SimplexId>> tuple_index_;
};

struct ValidationIssue {
  int level = 0;
  SimplexId simplex = 0;
  int i = -1;
  int j = -1;
  std::string message;
};

struct ValidationReport {
  bool passed = true;
  std::vector<ValidationIssue> issues;
};

/// Exhaustive check of the face identity delta_i o delta_j = delta_{j-1} o delta_i
/// (i < j), face arities, face id ranges and level contiguity. Never throws.
ValidationReport validate(const SemiSimplicialComplex& x);

/// Level q holds all (q+1)-tuples of vertices 0..vertex_count-1; delta_i
/// deletes coordinate i.
SemiSimplicialComplex product_complex(int vertex_count, int top);
/// Level q holds the injective (q+1)-words in letters 0..n-1; delta_i deletes
/// letter i. Top level n-1.
SemiSimplicialComplex injective_words_complex(int n);
/// Proper nonempty subsets of {0..n} as increasing tuples, a triangulated
/// (n-1)-sphere.
SemiSimplicialComplex boundary_simplex(int n);
/// All nonempty subsets of {0..n}: the full n-simplex, a cone.
SemiSimplicialComplex full_simplex(int n);
/// Builds the complex on a list of vertex tuples per level with deletion
/// faces; every face of a listed tuple must itself be listed.
SemiSimplicialComplex complex_from_tuples(const std::vector<std::vector<VertexTuple>>& levels);

/// 0 -> Q -> F(X_0) -> F(X_1) -> ... with d^l = sum_i (-1)^i delta^i; the first
/// term is the augmentation in degree -1. Throws InvalidComplex when the
/// complex does not validate.
la::CochainComplex augmented_cochain_complex(const SemiSimplicialComplex& x);

/// x (at lower_level) is obtained from y (at upper_level) by finitely many
/// face maps; strict, so equal levels give false.
bool is_face(const SemiSimplicialComplex& x, int lower_level, SimplexId lower, int upper_level, SimplexId upper);

/// o_0 < o_1 < ... < o_m with o_q at level q and o_q = delta_{witness[q]}(o_{q+1}).
struct Flag {
  std::vector<SimplexId> simplices;
  std::vector<int> witness;
};

/// Flag descending from top via delta_{face_index} at each step.
Flag descending_flag(const SemiSimplicialComplex& x, int top, SimplexId top_simplex, int face_index = 0);
bool is_flag(const SemiSimplicialComplex& x, const Flag& f);

/// Coning homotopy h_k(x_0..x_k) = (v, x_0, .., x_k) on the chains of a
/// product complex, with h_{-1}(1) = (v) and all bounds equal to 1. The map
/// out of the top level lands in the (empty) level above it.
la::ChainHomotopy cone_homotopy(const SemiSimplicialComplex& product, int vertex);

}  // namespace qss::ss
