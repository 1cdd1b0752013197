#pragma once

// Fully enumerated finite groups, their levelwise actions on semi-simplicial
// complexes, orbits and stabilizers, generic flags with their conjugating
// elements, and the stabilizer compatibility checks for families.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qss/ext_int.hpp"
#include "qss/semisimplicial.hpp"

namespace qss::grp {

using ElementId = std::uint32_t;
/// Image notation on letters 0..n-1: p[x] is the image of x.
using Permutation = std::vector<int>;
/// A map between enumerated groups, image of every element id.
using GroupMap = std::vector<ElementId>;
/// A map defined on a subset of element ids (a subgroup).
using PartialMap = std::map<ElementId, ElementId>;

inline constexpr std::size_t kDefaultGroupCap = 5040;

class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  /// Multiplication table mul[a][b] = a*b. Throws InvalidGroup when the table
  /// is not square, not closed, has no two-sided identity or lacks inverses.
  /// Associativity is left to check_group_laws.
  static FiniteGroup from_table(std::vector<std::vector<ElementId>> mul);
  /// Closure of permutation generators on `degree` letters. Elements are
  /// sorted by image tuple, so id 0 is the identity. (a*b)(x) = a(b(x)).
  static FiniteGroup from_permutations(const std::vector<Permutation>& generators, int degree,
                                       std::size_t cap = kDefaultGroupCap);
  /// All permutations of 0..n-1 in lexicographic order of image tuples.
  static FiniteGroup symmetric(int n, std::size_t cap = kDefaultGroupCap);
  static FiniteGroup trivial() { return FiniteGroup(); }

  std::size_t size() const { return inverse_.size(); }
  ElementId identity() const { return identity_; }
  ElementId mul(ElementId a, ElementId b) const { return mul_[a][b]; }
  ElementId inv(ElementId a) const { return inverse_[a]; }
  ElementId conjugate(ElementId w, ElementId h) const { return mul(mul(w, h), inv(w)); }
  const std::vector<std::vector<ElementId>>& table() const { return mul_; }

  bool has_permutations() const { return !perms_.empty(); }
  int degree() const { return degree_; }
  const Permutation& permutation(ElementId g) const { return perms_.at(g); }
  std::optional<ElementId> find_permutation(const Permutation& p) const;
  std::string name(ElementId g) const;

 private:
  static FiniteGroup from_sorted_permutations(std::vector<Permutation> elems, int degree);

  std::vector<std::vector<ElementId>> mul_;
  std::vector<ElementId> inverse_;
  ElementId identity_ = 0;
  int degree_ = 0;
  std::vector<Permutation> perms_;
  std::map<Permutation, ElementId> perm_index_;
};

struct CheckReport {
  bool passed = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void fail(std::string message) {
    passed = false;
    failures.push_back(std::move(message));
  }
};

/// Identity, inverse and associativity laws; associativity is exhaustive up
/// to exhaustive_limit elements and sampled on a fixed-seed set of triples
/// beyond it.
CheckReport check_group_laws(const FiniteGroup& g, std::size_t exhaustive_limit = 64);

/// First pair (a, b) with f(ab) != f(a) f(b), or nullopt.
std::optional<std::pair<ElementId, ElementId>> homomorphism_defect(const FiniteGroup& from, const FiniteGroup& to,
                                                                   const GroupMap& f);
bool is_injective(const GroupMap& f);
/// Sends a permutation of 0..k-1 to the same permutation of a larger letter
/// set fixing the extra letters. Throws InvalidGroup if an image is missing.
GroupMap extend_permutations(const FiniteGroup& small, const FiniteGroup& big);
GroupMap compose(const GroupMap& outer, const GroupMap& inner);

/// Levelwise action table act[level][g][s] on a complex.
class GroupAction {
 public:
  GroupAction(std::shared_ptr<const FiniteGroup> group, std::shared_ptr<const ss::SemiSimplicialComplex> complex,
              std::vector<std::vector<std::vector<ss::SimplexId>>> table);

  /// Permutes letters of tuple-labelled simplices.
  static GroupAction letter_action(std::shared_ptr<const FiniteGroup> group,
                                   std::shared_ptr<const ss::SemiSimplicialComplex> complex);
  static GroupAction trivial_action(std::shared_ptr<const FiniteGroup> group,
                                    std::shared_ptr<const ss::SemiSimplicialComplex> complex);
  /// images[level][k][s] is the image of simplex s under generators[k]; the
  /// action of every other element is obtained by composing generators.
  /// Throws InvalidAction if the generators do not generate the group or an
  /// image table is malformed.
  static GroupAction from_generator_images(std::shared_ptr<const FiniteGroup> group,
                                           std::shared_ptr<const ss::SemiSimplicialComplex> complex,
                                           const std::vector<ElementId>& generators,
                                           const std::vector<std::vector<std::vector<ss::SimplexId>>>& images);

  const FiniteGroup& group() const { return *group_; }
  const ss::SemiSimplicialComplex& complex() const { return *complex_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  std::shared_ptr<const ss::SemiSimplicialComplex> complex_ptr() const { return complex_; }

  ss::SimplexId act(int level, ElementId g, ss::SimplexId s) const {
    return table_[static_cast<std::size_t>(level)][g][s];
  }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::shared_ptr<const ss::SemiSimplicialComplex> complex_;
  std::vector<std::vector<std::vector<ss::SimplexId>>> table_;
};

/// Action laws on every level and commutation with every face map.
CheckReport check_action(const GroupAction& a);

/// Orbit partition of a level, each orbit sorted, orbits ordered by their
/// minimal id (the canonical representative).
std::vector<std::vector<ss::SimplexId>> orbits(const GroupAction& a, int level);
std::vector<ElementId> stabilizer(const GroupAction& a, int level, ss::SimplexId s);
/// Largest t with one orbit on every level 0..t; -inf when level 0 is not a
/// single orbit; the top level when every level is transitive.
ExtInt transitivity_degree(const GroupAction& a);

struct FlaggedAction {
  std::shared_ptr<const GroupAction> action;
  int depth = -1;
  ss::Flag flag;
  /// stabilizers[q] = H_q, sorted element ids, q = 0..depth.
  std::vector<std::vector<ElementId>> stabilizers;
  /// w[q][i] for q = 0..depth-1 and i = 0..q+1.
  std::vector<std::vector<ElementId>> w;
};

/// o_depth is the minimal-id simplex at level depth and o_q = delta_0(o_{q+1});
/// w[q][i] is the minimal element id with delta_i(o_{q+1}) = w^{-1} o_q.
/// Throws NotTransitiveEnough when the action is not depth-transitive.
FlaggedAction generic_flag(std::shared_ptr<const GroupAction> action, int depth);

/// w H_{q+1} w^{-1} contained in H_q and delta_i(o_{q+1}) = w^{-1} o_q for
/// every stored w[q][i].
CheckReport check_int_inclusion(const FlaggedAction& f);

enum class Mq3Variant { A, B, C };
std::string to_string(Mq3Variant v);
Mq3Variant parse_mq3_variant(const std::string& s);

/// The groups G_0..G_r of a family with embeddings iota[k]: G_k -> G_{k+1}.
struct GroupTower {
  std::vector<std::shared_ptr<const FiniteGroup>> groups;
  std::vector<GroupMap> iota;

  /// G_k, trivial for k < 0.
  const FiniteGroup& at(int k) const;
  /// iota_{to-1} o ... o iota_from : G_from -> G_to (from <= to). Negative
  /// `from` maps the trivial group to the identity.
  GroupMap embedding(int from, int to) const;
};

/// Epimorphisms pi[p]: H_{r,p} -> G_{r-p-1} and sections sigma[p]: G_{r-p-1} ->
/// H_{r,p}, indexed by p = 0..depth. Entries may be absent.
struct Mq3Maps {
  std::vector<std::optional<PartialMap>> pi;
  std::vector<std::optional<GroupMap>> sigma;
};

/// The maps induced by the composite embeddings G_{r-p-1} -> G_r, valid when
/// every H_{r,p} equals the embedded copy.
Mq3Maps standard_mq3_maps(const FlaggedAction& f, const GroupTower& tower, int r);

/// Variant a: H_p equals the copy of G_{r-p-1} and Int(w[p][i]) restricted to
/// H_{p+1} equals iota_{r-p-2}. Variant b: pi[p] is a surjective homomorphism
/// and pi[p] o Int(w[p][i]) = iota o pi[p+1]. Variant c: sigma[p] is a
/// homomorphic section of pi[p] and pi[p] o Int(w[p][i]) o sigma[p+1] = iota.
/// Throws MissingData when the variant needs maps that are absent.
CheckReport check_mq3(const FlaggedAction& f, const GroupTower& tower, int r, Mq3Variant variant,
                      const Mq3Maps& maps = {});

}  // namespace qss::grp
