#include <algorithm>
#include <numeric>
#include <sstream>

#include "qss/groupaction.hpp"

namespace qss::grp {

using ss::SimplexId;

GroupAction::GroupAction(std::shared_ptr<const FiniteGroup> group,
                         std::shared_ptr<const ss::SemiSimplicialComplex> complex,
                         std::vector<std::vector<std::vector<SimplexId>>> table)
    : group_(std::move(group)), complex_(std::move(complex)), table_(std::move(table)) {
  if (!group_ || !complex_) throw InvalidAction("action needs a group and a complex");
  if (table_.size() != complex_->num_levels()) throw InvalidAction("action table does not cover every level");
  for (std::size_t k = 0; k < table_.size(); ++k) {
    const std::size_t n = complex_->level_size(static_cast<int>(k));
    if (table_[k].size() != group_->size()) throw InvalidAction("action table needs one row per group element");
    for (const auto& row : table_[k]) {
      if (row.size() != n) throw InvalidAction("action row has the wrong length at level " + std::to_string(k));
      for (SimplexId s : row)
        if (s >= n) throw InvalidAction("action image out of range at level " + std::to_string(k));
    }
  }
}

GroupAction GroupAction::letter_action(std::shared_ptr<const FiniteGroup> group,
                                       std::shared_ptr<const ss::SemiSimplicialComplex> complex) {
  if (!group->has_permutations() && group->size() > 1)
    throw InvalidAction("letter action needs a permutation group");
  if (!complex->has_tuples()) throw InvalidAction("letter action needs tuple-labelled simplices");
  std::vector<std::vector<std::vector<SimplexId>>> table(complex->num_levels());
  for (int k = 0; k < static_cast<int>(complex->num_levels()); ++k) {
    auto& lvl = table[static_cast<std::size_t>(k)];
    lvl.assign(group->size(), std::vector<SimplexId>(complex->level_size(k)));
    for (ElementId g = 0; g < group->size(); ++g) {
      for (SimplexId s = 0; s < complex->level_size(k); ++s) {
        if (!group->has_permutations()) {
          lvl[g][s] = s;
          continue;
        }
        const auto& p = group->permutation(g);
        ss::VertexTuple t = complex->tuple(k, s);
        for (int& x : t) {
          if (x < 0 || x >= static_cast<int>(p.size()))
            throw InvalidAction("letter " + std::to_string(x) + " is outside the permuted range");
          x = p[static_cast<std::size_t>(x)];
        }
        auto img = complex->find_tuple(k, t);
        if (!img) throw InvalidAction("complex is not closed under the letter action at " + complex->label(k, s));
        lvl[g][s] = *img;
      }
    }
  }
  return GroupAction(std::move(group), std::move(complex), std::move(table));
}

GroupAction GroupAction::trivial_action(std::shared_ptr<const FiniteGroup> group,
                                        std::shared_ptr<const ss::SemiSimplicialComplex> complex) {
  std::vector<std::vector<std::vector<SimplexId>>> table(complex->num_levels());
  for (int k = 0; k < static_cast<int>(complex->num_levels()); ++k) {
    std::vector<SimplexId> id(complex->level_size(k));
    std::iota(id.begin(), id.end(), SimplexId{0});
    table[static_cast<std::size_t>(k)].assign(group->size(), id);
  }
  return GroupAction(std::move(group), std::move(complex), std::move(table));
}

GroupAction GroupAction::from_generator_images(std::shared_ptr<const FiniteGroup> group,
                                               std::shared_ptr<const ss::SemiSimplicialComplex> complex,
                                               const std::vector<ElementId>& generators,
                                               const std::vector<std::vector<std::vector<SimplexId>>>& images) {
  const std::size_t levels = complex->num_levels();
  if (images.size() != levels) throw InvalidAction("generator images must cover every level");
  for (std::size_t k = 0; k < levels; ++k) {
    if (images[k].size() != generators.size()) throw InvalidAction("one image list per generator is required");
    for (const auto& img : images[k]) {
      if (img.size() != complex->level_size(static_cast<int>(k)))
        throw InvalidAction("generator image has the wrong length at level " + std::to_string(k));
      for (SimplexId s : img)
        if (s >= img.size()) throw InvalidAction("generator image out of range at level " + std::to_string(k));
    }
  }
  for (ElementId g : generators)
    if (g >= group->size()) throw InvalidAction("generator id out of range");

  const std::size_t n = group->size();
  std::vector<std::vector<std::vector<SimplexId>>> table(levels, std::vector<std::vector<SimplexId>>(n));
  std::vector<bool> known(n, false);
  const ElementId e = group->identity();
  known[e] = true;
  for (std::size_t k = 0; k < levels; ++k) {
    table[k][e].resize(complex->level_size(static_cast<int>(k)));
    std::iota(table[k][e].begin(), table[k][e].end(), SimplexId{0});
  }
  // Breadth-first over words: act(s * h) = act(s) o act(h).
  std::vector<ElementId> frontier{e};
  while (!frontier.empty()) {
    std::vector<ElementId> next;
    for (ElementId h : frontier)
      for (std::size_t gi = 0; gi < generators.size(); ++gi) {
        const ElementId sh = group->mul(generators[gi], h);
        if (known[sh]) continue;
        known[sh] = true;
        for (std::size_t k = 0; k < levels; ++k) {
          const auto& ah = table[k][h];
          auto& out = table[k][sh];
          out.resize(ah.size());
          for (std::size_t s = 0; s < ah.size(); ++s) out[s] = images[k][gi][ah[s]];
        }
        next.push_back(sh);
      }
    frontier = std::move(next);
  }
  if (std::find(known.begin(), known.end(), false) != known.end())
    throw InvalidAction("generators do not generate the group");
  return GroupAction(std::move(group), std::move(complex), std::move(table));
}

CheckReport check_action(const GroupAction& a) {
  CheckReport rep;
  const auto& g = a.group();
  const auto& x = a.complex();
  const int levels = static_cast<int>(x.num_levels());
  for (int k = 0; k < levels; ++k) {
    const std::size_t n = x.level_size(k);
    for (SimplexId s = 0; s < n; ++s)
      if (a.act(k, g.identity(), s) != s) {
        rep.fail("identity moves " + x.label(k, s) + " at level " + std::to_string(k));
        break;
      }
    bool broken = false;
    for (ElementId u = 0; u < g.size() && !broken; ++u)
      for (ElementId v = 0; v < g.size() && !broken; ++v)
        for (SimplexId s = 0; s < n; ++s)
          if (a.act(k, g.mul(u, v), s) != a.act(k, u, a.act(k, v, s))) {
            rep.fail("compatibility fails for (" + g.name(u) + ", " + g.name(v) + ") on " + x.label(k, s) +
                     " at level " + std::to_string(k));
            broken = true;
            break;
          }
  }
  for (int k = 1; k < levels; ++k) {
    bool broken = false;
    for (ElementId u = 0; u < g.size() && !broken; ++u)
      for (SimplexId s = 0; s < x.level_size(k) && !broken; ++s)
        for (int i = 0; i <= k; ++i)
          if (x.face(k, a.act(k, u, s), i) != a.act(k - 1, u, x.face(k, s, i))) {
            std::ostringstream os;
            os << "face " << i << " is not equivariant for " << g.name(u) << " on " << x.label(k, s) << " at level "
               << k;
            rep.fail(os.str());
            broken = true;
            break;
          }
  }
  return rep;
}

std::vector<std::vector<SimplexId>> orbits(const GroupAction& a, int level) {
  const std::size_t n = a.complex().level_size(level);
  std::vector<bool> seen(n, false);
  std::vector<std::vector<SimplexId>> out;
  for (SimplexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<SimplexId> orbit;
    for (ElementId g = 0; g < a.group().size(); ++g) {
      const SimplexId t = a.act(level, g, s);
      if (!seen[t]) {
        seen[t] = true;
        orbit.push_back(t);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<ElementId> stabilizer(const GroupAction& a, int level, SimplexId s) {
  std::vector<ElementId> h;
  for (ElementId g = 0; g < a.group().size(); ++g)
    if (a.act(level, g, s) == s) h.push_back(g);
  return h;
}

ExtInt transitivity_degree(const GroupAction& a) {
  const int top = a.complex().top_level();
  for (int k = 0; k <= top; ++k) {
    if (orbits(a, k).size() != 1) return k == 0 ? ExtInt::neg_inf() : ExtInt(k - 1);
  }
  if (top < 0) return ExtInt::neg_inf();
  return ExtInt(top);
}

}  // namespace qss::grp
