#include <algorithm>
#include <cctype>
#include <sstream>

#include "qss/groupaction.hpp"

namespace qss::grp {

using ss::SimplexId;

FlaggedAction generic_flag(std::shared_ptr<const GroupAction> action, int depth) {
  if (!action) throw InvalidAction("generic flag needs an action");
  if (depth < -1) throw std::invalid_argument("flag depth must be at least -1");
  const ExtInt tau = transitivity_degree(*action);
  if (depth >= 0 && tau < ExtInt(depth)) {
    throw NotTransitiveEnough("action is " + tau.to_string() + "-transitive, flag of depth " +
                              std::to_string(depth) + " requested");
  }
  FlaggedAction f;
  f.action = action;
  f.depth = depth;
  if (depth < 0) return f;
  const auto& x = action->complex();
  f.flag = ss::descending_flag(x, depth, 0, 0);
  for (int q = 0; q <= depth; ++q)
    f.stabilizers.push_back(stabilizer(*action, q, f.flag.simplices[static_cast<std::size_t>(q)]));
  const auto& g = action->group();
  for (int q = 0; q < depth; ++q) {
    const SimplexId oq = f.flag.simplices[static_cast<std::size_t>(q)];
    const SimplexId up = f.flag.simplices[static_cast<std::size_t>(q) + 1];
    std::vector<ElementId> row;
    for (int i = 0; i <= q + 1; ++i) {
      const SimplexId face = x.face(q + 1, up, i);
      ElementId found = 0;
      bool ok = false;
      for (ElementId w = 0; w < g.size() && !ok; ++w) {
        if (action->act(q, w, face) == oq) {
          found = w;
          ok = true;
        }
      }
      // Level q is transitive, so some element always works.
      if (!ok) throw NotTransitiveEnough("no element carries a face of the flag back to the flag");
      row.push_back(found);
    }
    f.w.push_back(std::move(row));
  }
  return f;
}

CheckReport check_int_inclusion(const FlaggedAction& f) {
  CheckReport rep;
  if (f.depth <= 0) {
    rep.notes.push_back("no w-elements at this depth; inclusion holds vacuously");
    return rep;
  }
  const auto& a = *f.action;
  const auto& g = a.group();
  const auto& x = a.complex();
  for (int q = 0; q < f.depth; ++q) {
    const auto& hq = f.stabilizers[static_cast<std::size_t>(q)];
    const auto& hq1 = f.stabilizers[static_cast<std::size_t>(q) + 1];
    const SimplexId oq = f.flag.simplices[static_cast<std::size_t>(q)];
    const SimplexId up = f.flag.simplices[static_cast<std::size_t>(q) + 1];
    for (int i = 0; i <= q + 1; ++i) {
      const ElementId w = f.w[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)];
      std::ostringstream where;
      where << "(q,i)=(" << q << "," << i << ")";
      if (a.act(q, w, x.face(q + 1, up, i)) != oq)
        rep.fail("w" + where.str() + " = " + g.name(w) + " does not carry delta_i(o_{q+1}) to o_q");
      for (ElementId h : hq1) {
        const ElementId c = g.conjugate(w, h);
        if (!std::binary_search(hq.begin(), hq.end(), c)) {
          rep.fail("w" + where.str() + " conjugates " + g.name(h) + " in H_{q+1} to " + g.name(c) +
                   " outside H_q");
          break;
        }
      }
    }
  }
  return rep;
}

std::string to_string(Mq3Variant v) {
  switch (v) {
    case Mq3Variant::A: return "a";
    case Mq3Variant::B: return "b";
    case Mq3Variant::C: return "c";
  }
  return "?";
}

Mq3Variant parse_mq3_variant(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "a" || t == "mq3a") return Mq3Variant::A;
  if (t == "b" || t == "mq3b") return Mq3Variant::B;
  if (t == "c" || t == "mq3c") return Mq3Variant::C;
  throw std::invalid_argument("unknown compatibility variant '" + s + "'");
}

const FiniteGroup& GroupTower::at(int k) const {
  static const FiniteGroup trivial;
  if (k < 0) return trivial;
  if (static_cast<std::size_t>(k) >= groups.size())
    throw IndexOutOfRange("group G_" + std::to_string(k) + " is not part of the tower");
  return *groups[static_cast<std::size_t>(k)];
}

GroupMap GroupTower::embedding(int from, int to) const {
  if (from > to) throw std::invalid_argument("embedding must go up the tower");
  if (from < 0) return {at(to).identity()};
  GroupMap f(at(from).size());
  for (ElementId g = 0; g < f.size(); ++g) f[g] = g;
  for (int k = from; k < to; ++k) {
    if (static_cast<std::size_t>(k) >= iota.size())
      throw IndexOutOfRange("embedding iota_" + std::to_string(k) + " is missing");
    f = compose(iota[static_cast<std::size_t>(k)], f);
  }
  return f;
}

Mq3Maps standard_mq3_maps(const FlaggedAction& f, const GroupTower& tower, int r) {
  Mq3Maps m;
  for (int p = 0; p <= f.depth; ++p) {
    GroupMap phi = tower.embedding(r - p - 1, r);
    PartialMap pi;
    const auto& h = f.stabilizers[static_cast<std::size_t>(p)];
    for (ElementId g = 0; g < phi.size(); ++g)
      if (std::binary_search(h.begin(), h.end(), phi[g])) pi.emplace(phi[g], g);
    m.pi.emplace_back(std::move(pi));
    m.sigma.emplace_back(std::move(phi));
  }
  return m;
}

namespace {

std::string pq(int p, int i) {
  std::ostringstream os;
  os << "(p,i)=(" << p << "," << i << ")";
  return os.str();
}

// pi[p] for p >= 0; p = -1 is the identity of G_r.
std::optional<ElementId> apply_pi(const Mq3Maps& m, int p, ElementId h) {
  if (p < 0) return h;
  const auto& pi = *m.pi[static_cast<std::size_t>(p)];
  auto it = pi.find(h);
  if (it == pi.end()) return std::nullopt;
  return it->second;
}

void check_pi(CheckReport& rep, const FlaggedAction& f, const GroupTower& tower, int r, const Mq3Maps& m) {
  const auto& g = f.action->group();
  for (int p = 0; p <= f.depth; ++p) {
    const auto& h = f.stabilizers[static_cast<std::size_t>(p)];
    const auto& pi = *m.pi[static_cast<std::size_t>(p)];
    const auto& target = tower.at(r - p - 1);
    const std::string tag = "pi_{r,p} at p=" + std::to_string(p);
    bool domain_ok = pi.size() == h.size();
    for (ElementId x : h) domain_ok = domain_ok && pi.count(x) == 1;
    if (!domain_ok) {
      rep.fail(tag + " is not defined exactly on H_{r,p}");
      continue;
    }
    bool values_ok = true;
    for (const auto& [x, y] : pi) values_ok = values_ok && y < target.size();
    if (!values_ok) {
      rep.fail(tag + " has values outside G_{r-p-1}");
      continue;
    }
    bool hom = true;
    for (ElementId a : h) {
      for (ElementId b : h)
        if (pi.at(g.mul(a, b)) != target.mul(pi.at(a), pi.at(b))) {
          rep.fail(tag + " is not a homomorphism at (" + g.name(a) + ", " + g.name(b) + ")");
          hom = false;
          break;
        }
      if (!hom) break;
    }
    std::vector<bool> hit(target.size(), false);
    for (const auto& [x, y] : pi) hit[y] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) rep.fail(tag + " is not surjective");
  }
  rep.notes.push_back("kernels of the epimorphisms are finite, hence amenable");
}

}  // namespace

CheckReport check_mq3(const FlaggedAction& f, const GroupTower& tower, int r, Mq3Variant variant,
                      const Mq3Maps& maps) {
  CheckReport rep;
  if (!f.action) throw MissingData("compatibility check needs a flagged action");
  const auto& g = f.action->group();
  if (tower.at(r).size() != g.size()) {
    rep.fail("acting group does not match G_r of the tower");
    return rep;
  }
  const int d = f.depth;
  if (d < 0) {
    rep.notes.push_back("no flag; compatibility holds vacuously");
    return rep;
  }
  // w_{-1,0} = e: o_{-1} is the augmentation point.
  auto w_at = [&](int p, int i) -> ElementId {
    return p < 0 ? g.identity() : f.w[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)];
  };
  auto stab = [&](int p) -> std::vector<ElementId> {
    if (p >= 0) return f.stabilizers[static_cast<std::size_t>(p)];
    std::vector<ElementId> all(g.size());
    for (ElementId x = 0; x < g.size(); ++x) all[x] = x;
    return all;
  };
  auto iota = [&](int k) -> GroupMap { return tower.embedding(k, k + 1); };

  if (variant == Mq3Variant::A) {
    for (int p = 0; p <= d; ++p) {
      GroupMap phi = tower.embedding(r - p - 1, r);
      std::vector<ElementId> image(phi.begin(), phi.end());
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (image.size() != phi.size()) rep.fail("composite embedding into G_r is not injective at p=" + std::to_string(p));
      if (image != stab(p)) rep.fail("H_{r,p} differs from the copy of G_{r-p-1} at p=" + std::to_string(p));
    }
    for (int p = -1; p < d; ++p) {
      const GroupMap small = tower.embedding(r - p - 2, r);
      const GroupMap big = tower.embedding(r - p - 1, r);
      const GroupMap inc = iota(r - p - 2);
      for (int i = 0; i <= p + 1; ++i) {
        const ElementId w = w_at(p, i);
        for (ElementId x = 0; x < small.size(); ++x) {
          if (g.conjugate(w, small[x]) != big[inc[x]]) {
            rep.fail("Int(w) differs from the inclusion at " + pq(p, i) + " on " + tower.at(r - p - 2).name(x));
            break;
          }
        }
      }
    }
    return rep;
  }

  if (maps.pi.size() < static_cast<std::size_t>(d) + 1 ||
      std::any_of(maps.pi.begin(), maps.pi.begin() + d + 1, [](const auto& m) { return !m.has_value(); }))
    throw MissingData("variant " + to_string(variant) + " needs the epimorphisms pi_{r,p} for p = 0.." +
                      std::to_string(d));
  check_pi(rep, f, tower, r, maps);
  if (!rep.passed) return rep;

  if (variant == Mq3Variant::B) {
    for (int p = -1; p < d; ++p) {
      const GroupMap inc = iota(r - p - 2);
      for (int i = 0; i <= p + 1; ++i) {
        const ElementId w = w_at(p, i);
        for (ElementId h : stab(p + 1)) {
          const auto lhs = apply_pi(maps, p, g.conjugate(w, h));
          const auto low = apply_pi(maps, p + 1, h);
          if (!lhs || !low || *lhs != inc[*low]) {
            rep.fail("square does not commute at " + pq(p, i) + " on " + g.name(h));
            break;
          }
        }
      }
    }
    return rep;
  }

  if (maps.sigma.size() < static_cast<std::size_t>(d) + 1 ||
      std::any_of(maps.sigma.begin(), maps.sigma.begin() + d + 1, [](const auto& m) { return !m.has_value(); }))
    throw MissingData("variant c needs the sections sigma_{r,p} for p = 0.." + std::to_string(d));
  for (int p = 0; p <= d; ++p) {
    const auto& sigma = *maps.sigma[static_cast<std::size_t>(p)];
    const auto& src = tower.at(r - p - 1);
    const auto h = stab(p);
    const std::string tag = "sigma_{r,p} at p=" + std::to_string(p);
    if (sigma.size() != src.size()) {
      rep.fail(tag + " is not defined on all of G_{r-p-1}");
      continue;
    }
    if (auto bad = homomorphism_defect(src, g, sigma)) {
      rep.fail(tag + " is not a homomorphism at (" + src.name(bad->first) + ", " + src.name(bad->second) + ")");
      continue;
    }
    for (ElementId x = 0; x < src.size(); ++x) {
      if (!std::binary_search(h.begin(), h.end(), sigma[x])) {
        rep.fail(tag + " leaves H_{r,p} at " + src.name(x));
        break;
      }
      if (apply_pi(maps, p, sigma[x]) != std::optional<ElementId>(x)) {
        rep.fail(tag + " is not a section of pi at " + src.name(x));
        break;
      }
    }
  }
  if (!rep.passed) return rep;
  for (int p = -1; p < d; ++p) {
    const GroupMap inc = iota(r - p - 2);
    const auto& src = tower.at(r - p - 2);
    for (int i = 0; i <= p + 1; ++i) {
      const ElementId w = w_at(p, i);
      for (ElementId x = 0; x < src.size(); ++x) {
        const ElementId s = (*maps.sigma[static_cast<std::size_t>(p) + 1])[x];
        const auto lhs = apply_pi(maps, p, g.conjugate(w, s));
        if (!lhs || *lhs != inc[x]) {
          rep.fail("section diagram does not commute at " + pq(p, i) + " on " + src.name(x));
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace qss::grp
