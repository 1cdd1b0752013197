#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace qss::testing {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Dense dense_of(const la::RationalMatrix& m) {
  Dense d(m.rows(), std::vector<la::Rational>(m.cols()));
  for (const auto& [r, c, v] : m.triplets()) d[r][c] = v;
  return d;
}

std::size_t oracle_rank(Dense m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const la::Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t oracle_rank(const la::RationalMatrix& m) { return oracle_rank(dense_of(m)); }

std::vector<std::size_t> oracle_reduced_cohomology(const ss::SemiSimplicialComplex& x) {
  const int top = x.top_level();
  // coboundary out of level k-1 into level k; level -1 is the augmentation point.
  auto dim = [&](int k) -> std::size_t { return k < 0 ? 1 : x.level_size(k); };
  auto cobound_rank = [&](int k) -> std::size_t {
    if (k > top) return 0;
    Dense d(dim(k), std::vector<la::Rational>(dim(k - 1)));
    for (std::size_t s = 0; s < dim(k); ++s) {
      if (k == 0) {
        d[s][0] = 1;
        continue;
      }
      for (int i = 0; i <= k; ++i) {
        const auto f = x.face(k, static_cast<ss::SimplexId>(s), i);
        d[s][f] += (i % 2 == 0) ? 1 : -1;
      }
    }
    return oracle_rank(d);
  };
  std::vector<std::size_t> out;
  for (int k = 0; k <= top; ++k) out.push_back(dim(k) - cobound_rank(k + 1) - cobound_rank(k));
  return out;
}

ExtInt oracle_acyclicity(const ss::SemiSimplicialComplex& x) {
  const auto h = oracle_reduced_cohomology(x);
  for (std::size_t k = 0; k < h.size(); ++k)
    if (h[k] != 0) return k == 0 ? ExtInt::neg_inf() : ExtInt(static_cast<std::int64_t>(k) - 1);
  return ExtInt::pos_inf();
}

std::size_t oracle_orbit_count(const grp::GroupAction& a, int level) {
  std::set<std::set<ss::SimplexId>> orbits;
  for (ss::SimplexId s = 0; s < a.complex().level_size(level); ++s) {
    std::set<ss::SimplexId> orbit;
    for (grp::ElementId g = 0; g < a.group().size(); ++g) orbit.insert(a.act(level, g, s));
    orbits.insert(orbit);
  }
  return orbits.size();
}

ExtInt oracle_transitivity(const grp::GroupAction& a) {
  const int top = a.complex().top_level();
  if (top < 0 || oracle_orbit_count(a, 0) != 1) return ExtInt::neg_inf();
  int t = 0;
  while (t + 1 <= top && oracle_orbit_count(a, t + 1) == 1) ++t;
  return ExtInt(t);
}

std::vector<std::size_t> oracle_total_cohomology(const spec::DoubleComplex& dc, int up_to) {
  const int np = dc.num_p(), nq = dc.num_q();
  auto cells = [&](int t) {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < np; ++p)
      if (t - p >= 0 && t - p < nq) out.emplace_back(p, t - p);
    return out;
  };
  auto dim = [&](int t) {
    std::size_t n = 0;
    for (auto [p, q] : cells(t)) n += dc.dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    return n;
  };
  // Differential from degree t to t+1 as a dense matrix.
  auto diff = [&](int t) {
    Dense d(dim(t + 1), std::vector<la::Rational>(dim(t)));
    std::size_t col0 = 0;
    for (auto [p, q] : cells(t)) {
      const auto pp = static_cast<std::size_t>(p), qq = static_cast<std::size_t>(q);
      std::size_t row0 = 0;
      for (auto [p2, q2] : cells(t + 1)) {
        const la::RationalMatrix* m = nullptr;
        la::Rational sign = 1;
        if (p2 == p + 1 && q2 == q) m = &dc.horiz[pp][qq];
        if (p2 == p && q2 == q + 1) {
          m = &dc.vert[pp][qq];
          sign = (p % 2 == 0) ? 1 : -1;
        }
        if (m)
          for (const auto& [r, c, v] : m->triplets()) d[row0 + r][col0 + c] += sign * v;
        row0 += dc.dims[static_cast<std::size_t>(p2)][static_cast<std::size_t>(q2)];
      }
      col0 += dc.dims[pp][qq];
    }
    return d;
  };
  std::vector<std::size_t> out;
  for (int t = 0; t <= up_to; ++t) {
    const std::size_t in = t > 0 ? oracle_rank(diff(t - 1)) : 0;
    out.push_back(dim(t) - oracle_rank(diff(t)) - in);
  }
  return out;
}

namespace {

struct Builder {
  std::vector<std::vector<std::size_t>> dims;
  // arrows: from (p,q,i) to (p',q',j) with coefficient
  struct Arrow {
    int p, q;
    std::size_t i;
    bool horizontal;
    std::size_t j;
    int c;
  };
  std::vector<Arrow> arrows;
  std::size_t max_dim;

  bool fits(const std::vector<std::pair<int, int>>& cells) const {
    std::map<std::pair<int, int>, std::size_t> need;
    for (auto c : cells) ++need[c];
    for (auto [c, n] : need) {
      if (c.first < 0 || c.second < 0 || c.first >= static_cast<int>(dims.size()) ||
          c.second >= static_cast<int>(dims[0].size()))
        return false;
      if (dims[static_cast<std::size_t>(c.first)][static_cast<std::size_t>(c.second)] + n > max_dim) return false;
    }
    return true;
  }
  std::size_t add(int p, int q) { return dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]++; }
};

int coefficient(Rng& rng) {
  const int c = uniform(rng, 1, 2);
  return uniform(rng, 0, 1) ? c : -c;
}

}  // namespace

spec::DoubleComplex random_double_complex(Rng& rng, int max_grid, std::size_t max_dim) {
  const int np = uniform(rng, 1, max_grid), nq = uniform(rng, 1, max_grid);
  Builder b{std::vector<std::vector<std::size_t>>(static_cast<std::size_t>(np),
                                                  std::vector<std::size_t>(static_cast<std::size_t>(nq))),
            {},
            max_dim};
  const int pieces = uniform(rng, 1, np * nq + 2);
  for (int n = 0; n < pieces; ++n) {
    const int p = uniform(rng, 0, np - 1), q = uniform(rng, 0, nq - 1);
    switch (uniform(rng, 0, 4)) {
      case 0:
        if (b.fits({{p, q}})) b.add(p, q);
        break;
      case 1:
      case 2: {
        const bool h = uniform(rng, 0, 1);
        const int p2 = p + (h ? 1 : 0), q2 = q + (h ? 0 : 1);
        if (!b.fits({{p, q}, {p2, q2}})) break;
        const auto i = b.add(p, q), j = b.add(p2, q2);
        b.arrows.push_back({p, q, i, h, j, coefficient(rng)});
        break;
      }
      case 3: {
        if (!b.fits({{p, q}, {p + 1, q}, {p, q + 1}, {p + 1, q + 1}})) break;
        const int a = coefficient(rng), c = coefficient(rng), k = uniform(rng, 0, 1) ? 1 : -1;
        const auto s = b.add(p, q), e = b.add(p + 1, q), n2 = b.add(p, q + 1), ne = b.add(p + 1, q + 1);
        b.arrows.push_back({p, q, s, true, e, a});
        b.arrows.push_back({p, q, s, false, n2, c});
        // d_V d_H = d_H d_V on the corner: a * (c k) = c * (a k).
        b.arrows.push_back({p + 1, q, e, false, ne, c * k});
        b.arrows.push_back({p, q + 1, n2, true, ne, a * k});
        break;
      }
      case 4: {
        // Staircase: a_i at (p+i, q-i) with d_H a_i = b_i at (p+i+1, q-i) and
        // d_V a_{i+1} = b_i.
        const int len = uniform(rng, 1, 3);
        const bool tail = uniform(rng, 0, 1);
        std::vector<std::pair<int, int>> cells;
        for (int i = 0; i < len; ++i) {
          cells.emplace_back(p + i, q - i);
          if (i + 1 < len || tail) cells.emplace_back(p + i + 1, q - i);
        }
        if (!b.fits(cells)) break;
        std::vector<std::size_t> as, bs;
        for (int i = 0; i < len; ++i) {
          as.push_back(b.add(p + i, q - i));
          if (i + 1 < len || tail) bs.push_back(b.add(p + i + 1, q - i));
        }
        for (int i = 0; i < len; ++i) {
          const auto ii = static_cast<std::size_t>(i);
          if (ii < bs.size()) b.arrows.push_back({p + i, q - i, as[ii], true, bs[ii], coefficient(rng)});
          if (i > 0) b.arrows.push_back({p + i, q - i, as[ii], false, bs[ii - 1], coefficient(rng)});
        }
        break;
      }
    }
  }

  auto dc = spec::DoubleComplex::with_dims(b.dims);
  for (const auto& a : b.arrows) {
    const auto p = static_cast<std::size_t>(a.p), q = static_cast<std::size_t>(a.q);
    auto& m = a.horizontal ? dc.horiz[p][q] : dc.vert[p][q];
    m.add(a.j, a.i, a.c);
  }

  // Basis changes: signed permutations always, elementary moves when every
  // entry stays in {-2..2}.
  auto in_range = [](const la::RationalMatrix& m) {
    for (const auto& [r, c, v] : m.triplets())
      if (abs(v) > 2 || v.get_den() != 1) return false;
    return true;
  };
  for (int round = 0; round < 2 * np * nq; ++round) {
    const int p = uniform(rng, 0, np - 1), q = uniform(rng, 0, nq - 1);
    const auto pp = static_cast<std::size_t>(p), qq = static_cast<std::size_t>(q);
    const std::size_t n = dc.dims[pp][qq];
    if (n == 0) continue;
    // P acts on cell (p,q): incoming maps become P M, outgoing N P^{-1}.
    la::RationalMatrix P = la::RationalMatrix::identity(n), Pinv = la::RationalMatrix::identity(n);
    if (n >= 2 && uniform(rng, 0, 1)) {
      const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
      auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
      if (j >= i) ++j;
      const int t = uniform(rng, 0, 1) ? 1 : -1;
      P.set(i, j, t);
      Pinv.set(i, j, -t);
    } else {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      P = la::RationalMatrix(n, n);
      Pinv = la::RationalMatrix(n, n);
      for (std::size_t k = 0; k < n; ++k) {
        const int s = uniform(rng, 0, 1) ? 1 : -1;
        P.set(perm[k], k, s);
        Pinv.set(k, perm[k], s);
      }
    }
    auto next = dc;
    if (p > 0) next.horiz[pp - 1][qq] = P * dc.horiz[pp - 1][qq];
    if (q > 0) next.vert[pp][qq - 1] = P * dc.vert[pp][qq - 1];
    next.horiz[pp][qq] = dc.horiz[pp][qq] * Pinv;
    next.vert[pp][qq] = dc.vert[pp][qq] * Pinv;
    const bool ok = (p == 0 || in_range(next.horiz[pp - 1][qq])) && (q == 0 || in_range(next.vert[pp][qq - 1])) &&
                    in_range(next.horiz[pp][qq]) && in_range(next.vert[pp][qq]);
    if (ok) dc = std::move(next);
  }
  return dc;
}

quillen::StabilityProfile random_profile(Rng& rng) {
  quillen::StabilityProfile p;
  const int R = uniform(rng, 1, 12);
  p.R = ExtInt(R);
  p.q0 = uniform(rng, 1, 3);
  auto value = [&]() -> ExtInt {
    const int roll = uniform(rng, 0, 19);
    if (roll == 0) return ExtInt::pos_inf();
    if (roll == 1) return ExtInt::neg_inf();
    return ExtInt(uniform(rng, 0, 12));
  };
  for (int r = 0; r <= R; ++r) {
    p.gamma.push_back(value());
    p.tau.push_back(value());
  }
  return p;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

std::vector<std::size_t> oracle_group_cohomology(const grp::FiniteGroup& g, const std::vector<grp::ElementId>& h,
                                                 int up_to) {
  const std::size_t m = h.size();
  std::map<grp::ElementId, std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i) pos[h[i]] = i;
  auto power = [&](int n) {
    std::size_t v = 1;
    for (int i = 0; i < n; ++i) v *= m;
    return v;
  };
  // Coordinates of (h_1..h_n) in mixed radix with h_1 most significant.
  auto decode = [&](std::size_t idx, int n) {
    std::vector<std::size_t> t(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      t[static_cast<std::size_t>(i)] = idx % m;
      idx /= m;
    }
    return t;
  };
  auto encode = [&](const std::vector<std::size_t>& t) {
    std::size_t idx = 0;
    for (auto v : t) idx = idx * m + v;
    return idx;
  };
  auto coboundary_rank = [&](int n) -> std::size_t {
    if (n < 0) return 0;
    Dense d(power(n + 1), std::vector<la::Rational>(power(n)));
    for (std::size_t row = 0; row < power(n + 1); ++row) {
      const auto t = decode(row, n + 1);
      // f(h_2..h_{n+1})
      d[row][encode(std::vector<std::size_t>(t.begin() + 1, t.end()))] += 1;
      for (int i = 0; i < n; ++i) {
        auto u = t;
        const auto prod = g.mul(h[t[static_cast<std::size_t>(i)]], h[t[static_cast<std::size_t>(i) + 1]]);
        u[static_cast<std::size_t>(i)] = pos.at(prod);
        u.erase(u.begin() + i + 1);
        d[row][encode(u)] += (i % 2 == 0) ? -1 : 1;
      }
      d[row][encode(std::vector<std::size_t>(t.begin(), t.end() - 1))] += (n % 2 == 0) ? -1 : 1;
    }
    return oracle_rank(d);
  };
  std::vector<std::size_t> out;
  for (int n = 0; n <= up_to; ++n) out.push_back(power(n) - coboundary_rank(n) - coboundary_rank(n - 1));
  return out;
}

}  // namespace qss::testing
