#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "qss/groupaction.hpp"

namespace qss::grp {

FiniteGroup::FiniteGroup() : mul_{{0}}, inverse_{0}, identity_(0) {}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<ElementId>> mul) {
  const std::size_t n = mul.size();
  if (n == 0) throw InvalidGroup("empty multiplication table");
  for (const auto& row : mul) {
    if (row.size() != n) throw InvalidGroup("multiplication table is not square");
    for (ElementId x : row)
      if (x >= n) throw InvalidGroup("multiplication table is not closed");
  }
  std::optional<ElementId> e;
  for (ElementId c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (ElementId x = 0; x < n && ok; ++x) ok = mul[c][x] == x && mul[x][c] == x;
    if (ok) e = c;
  }
  if (!e) throw InvalidGroup("no two-sided identity");
  FiniteGroup g;
  g.mul_ = std::move(mul);
  g.identity_ = *e;
  g.inverse_.assign(n, 0);
  for (ElementId a = 0; a < n; ++a) {
    bool found = false;
    for (ElementId b = 0; b < n && !found; ++b) {
      if (g.mul_[a][b] == *e && g.mul_[b][a] == *e) {
        g.inverse_[a] = b;
        found = true;
      }
    }
    if (!found) throw InvalidGroup("element " + std::to_string(a) + " has no inverse");
  }
  return g;
}

namespace {

Permutation compose_perm(const Permutation& a, const Permutation& b) {
  Permutation c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[static_cast<std::size_t>(b[x])];
  return c;
}

void check_permutation(const Permutation& p, int degree) {
  if (static_cast<int>(p.size()) != degree) throw InvalidGroup("generator has the wrong number of letters");
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= degree || seen[static_cast<std::size_t>(x)]) throw InvalidGroup("generator is not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators, int degree,
                                           std::size_t cap) {
  if (degree < 0) throw InvalidGroup("negative degree");
  for (const auto& p : generators) check_permutation(p, degree);
  Permutation id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> seen{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& h : frontier)
      for (const auto& s : generators) {
        auto p = compose_perm(s, h);
        if (seen.insert(p).second) {
          if (seen.size() > cap) throw BudgetExceeded("group exceeds the element cap of " + std::to_string(cap));
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  return from_sorted_permutations({seen.begin(), seen.end()}, degree);
}

FiniteGroup FiniteGroup::symmetric(int n, std::size_t cap) {
  if (n < 0) throw InvalidGroup("negative degree");
  std::size_t order = 1;
  for (int k = 2; k <= n; ++k) {
    order *= static_cast<std::size_t>(k);
    if (order > cap) throw BudgetExceeded("S_" + std::to_string(n) + " exceeds the element cap");
  }
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> elems;
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return from_sorted_permutations(std::move(elems), n);
}

FiniteGroup FiniteGroup::from_sorted_permutations(std::vector<Permutation> elems, int degree) {
  std::map<Permutation, ElementId> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<ElementId>(i));
  const std::size_t n = elems.size();
  std::vector<std::vector<ElementId>> mul(n, std::vector<ElementId>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = index.at(compose_perm(elems[a], elems[b]));
  FiniteGroup g = from_table(std::move(mul));
  g.degree_ = degree;
  g.perms_ = std::move(elems);
  g.perm_index_ = std::move(index);
  return g;
}

std::optional<ElementId> FiniteGroup::find_permutation(const Permutation& p) const {
  auto it = perm_index_.find(p);
  if (it == perm_index_.end()) return std::nullopt;
  return it->second;
}

std::string FiniteGroup::name(ElementId g) const {
  if (!has_permutations()) return "g" + std::to_string(g);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < perms_[g].size(); ++i) os << (i ? " " : "") << perms_[g][i];
  os << ']';
  return os.str();
}

CheckReport check_group_laws(const FiniteGroup& g, std::size_t exhaustive_limit) {
  CheckReport rep;
  const std::size_t n = g.size();
  const ElementId e = g.identity();
  for (ElementId a = 0; a < n; ++a) {
    if (g.mul(e, a) != a || g.mul(a, e) != a) rep.fail("identity law fails at " + g.name(a));
    if (g.mul(a, g.inv(a)) != e || g.mul(g.inv(a), a) != e) rep.fail("inverse law fails at " + g.name(a));
  }
  auto assoc = [&](ElementId a, ElementId b, ElementId c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      rep.fail("associativity fails at (" + g.name(a) + ", " + g.name(b) + ", " + g.name(c) + ")");
  };
  if (n <= exhaustive_limit) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        for (ElementId c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
    for (int t = 0; t < 20000; ++t) assoc(pick(rng), pick(rng), pick(rng));
  }
  return rep;
}

std::optional<std::pair<ElementId, ElementId>> homomorphism_defect(const FiniteGroup& from, const FiniteGroup& to,
                                                                   const GroupMap& f) {
  if (f.size() != from.size()) return std::make_pair(ElementId{0}, ElementId{0});
  for (ElementId x : f)
    if (x >= to.size()) return std::make_pair(ElementId{0}, ElementId{0});
  for (ElementId a = 0; a < from.size(); ++a)
    for (ElementId b = 0; b < from.size(); ++b)
      if (f[from.mul(a, b)] != to.mul(f[a], f[b])) return std::make_pair(a, b);
  return std::nullopt;
}

bool is_injective(const GroupMap& f) {
  std::set<ElementId> s(f.begin(), f.end());
  return s.size() == f.size();
}

GroupMap extend_permutations(const FiniteGroup& small, const FiniteGroup& big) {
  if (!small.has_permutations() && small.size() == 1) return {big.identity()};
  if (!small.has_permutations() || !big.has_permutations() || small.degree() > big.degree())
    throw InvalidGroup("standard embedding needs permutation groups of increasing degree");
  GroupMap f(small.size());
  for (ElementId g = 0; g < small.size(); ++g) {
    Permutation p = small.permutation(g);
    for (int x = small.degree(); x < big.degree(); ++x) p.push_back(x);
    auto img = big.find_permutation(p);
    if (!img) throw InvalidGroup("extended permutation " + small.name(g) + " is not in the larger group");
    f[g] = *img;
  }
  return f;
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  GroupMap f(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) f[i] = outer.at(inner[i]);
  return f;
}

}  // namespace qss::grp
