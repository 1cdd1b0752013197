#include <cstdlib>
#include <sstream>

#include "qss/spectral.hpp"

namespace qss::spec {

std::size_t budget_from_env() {
  if (const char* s = std::getenv("QSS_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

DoubleComplex DoubleComplex::with_dims(std::vector<std::vector<std::size_t>> dims) {
  DoubleComplex dc;
  dc.dims = std::move(dims);
  for (const auto& col : dc.dims)
    if (col.size() != dc.dims[0].size()) throw ShapeMismatch("double complex grid is not rectangular");
  const int np = dc.num_p(), nq = dc.num_q();
  dc.horiz.resize(static_cast<std::size_t>(np));
  dc.vert.resize(static_cast<std::size_t>(np));
  for (int p = 0; p < np; ++p)
    for (int q = 0; q < nq; ++q) {
      dc.horiz[static_cast<std::size_t>(p)].emplace_back(dc.dim(p + 1, q), dc.dim(p, q));
      dc.vert[static_cast<std::size_t>(p)].emplace_back(dc.dim(p, q + 1), dc.dim(p, q));
    }
  return dc;
}

std::size_t DoubleComplex::dim(int p, int q) const {
  if (p < 0 || q < 0 || p >= num_p() || q >= num_q()) return 0;
  return dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

int DoubleComplex::max_total() const {
  if (num_p() == 0 || num_q() == 0) return -1;
  const int full = num_p() + num_q() - 2;
  return truncated_at >= 0 ? std::min(full, truncated_at) : full;
}

int DoubleComplex::exact_through() const {
  if (truncated_at >= 0 && truncated_at <= num_p() + num_q() - 2) return truncated_at - 1;
  return max_total();
}

void DoubleComplex::check() const {
  const int np = num_p(), nq = num_q();
  if (horiz.size() != static_cast<std::size_t>(np) || vert.size() != static_cast<std::size_t>(np))
    throw ShapeMismatch("double complex needs one map column per grid column");
  for (int p = 0; p < np; ++p) {
    if (dims[static_cast<std::size_t>(p)].size() != static_cast<std::size_t>(nq))
      throw ShapeMismatch("double complex grid is not rectangular");
    if (horiz[static_cast<std::size_t>(p)].size() != static_cast<std::size_t>(nq) ||
        vert[static_cast<std::size_t>(p)].size() != static_cast<std::size_t>(nq))
      throw ShapeMismatch("double complex needs one map per cell");
    for (int q = 0; q < nq; ++q) {
      const auto& h = horiz[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      const auto& v = vert[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      if (h.cols() != dim(p, q) || h.rows() != dim(p + 1, q) || v.cols() != dim(p, q) || v.rows() != dim(p, q + 1)) {
        std::ostringstream os;
        os << "map out of cell (" << p << "," << q << ") has the wrong shape";
        throw ShapeMismatch(os.str());
      }
    }
  }
  auto H = [&](int p, int q) -> const la::RationalMatrix& {
    return horiz[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  };
  auto V = [&](int p, int q) -> const la::RationalMatrix& {
    return vert[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  };
  for (int p = 0; p < np; ++p)
    for (int q = 0; q < nq; ++q) {
      std::ostringstream where;
      where << " at (" << p << "," << q << ")";
      if (p + 1 < np && !(H(p + 1, q) * H(p, q)).is_zero()) throw ComplexInvalid("d_H o d_H != 0" + where.str());
      if (q + 1 < nq && !(V(p, q + 1) * V(p, q)).is_zero()) throw ComplexInvalid("d_V o d_V != 0" + where.str());
      if (p + 1 < np && q + 1 < nq && !(H(p, q + 1) * V(p, q) == V(p + 1, q) * H(p, q)))
        throw ComplexInvalid("d_H d_V != d_V d_H" + where.str());
    }
}

TotalComplex totalize(const DoubleComplex& dc) {
  TotalComplex tc;
  tc.complex.first_degree = 0;
  const int top = dc.max_total();
  for (int t = 0; t <= top; ++t) {
    std::vector<std::size_t> off;
    std::size_t n = 0;
    for (int p = 0; p <= t; ++p) {
      off.push_back(n);
      n += dc.dim(p, t - p);
    }
    tc.offset.push_back(std::move(off));
    tc.complex.dims.push_back(n);
  }
  for (int t = 0; t < top; ++t) {
    la::RationalMatrix d(tc.complex.dims[static_cast<std::size_t>(t) + 1], tc.complex.dims[static_cast<std::size_t>(t)]);
    const auto& src = tc.offset[static_cast<std::size_t>(t)];
    const auto& dst = tc.offset[static_cast<std::size_t>(t) + 1];
    for (int p = 0; p <= t; ++p) {
      const int q = t - p;
      if (dc.dim(p, q) == 0) continue;
      if (p + 1 < dc.num_p())
        for (const auto& [r, c, v] : dc.horiz[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)].triplets())
          d.add(dst[static_cast<std::size_t>(p) + 1] + r, src[static_cast<std::size_t>(p)] + c, v);
      if (q + 1 < dc.num_q()) {
        const la::Rational sign = p % 2 == 0 ? 1 : -1;
        for (const auto& [r, c, v] : dc.vert[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)].triplets())
          d.add(dst[static_cast<std::size_t>(p)] + r, src[static_cast<std::size_t>(p)] + c, sign * v);
      }
    }
    tc.complex.differentials.push_back(std::move(d));
  }
  return tc;
}

std::vector<std::size_t> total_cohomology(const DoubleComplex& dc, int up_to) {
  dc.check();
  const auto tc = totalize(dc);
  const auto h = la::cohomology(tc.complex);
  std::vector<std::size_t> out;
  for (int t = 0; t <= up_to; ++t) out.push_back(static_cast<std::size_t>(t) < h.size() ? h[static_cast<std::size_t>(t)] : 0);
  return out;
}

namespace {

std::size_t checked_power(std::size_t base, int exp, std::size_t factor, std::size_t budget, int p, int q) {
  std::size_t v = factor;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && v > budget / base + 1) {
      v = budget + 1;
      break;
    }
    v *= base;
  }
  if (v > budget) {
    std::ostringstream os;
    os << "cell (" << p << "," << q << ") would have dimension above the budget of " << budget;
    throw BudgetExceeded(os.str());
  }
  return v;
}

}  // namespace

DoubleComplex build_group_double_complex(const grp::GroupAction& a, int max_p, int max_q, int max_total,
                                         std::size_t budget) {
  if (max_p < 0 || max_q < 0) throw std::invalid_argument("grid extents must be nonnegative");
  const auto& g = a.group();
  const auto& x = a.complex();
  const std::size_t n = g.size();
  auto level_size = [&](int q) { return x.level_size(q - 1); };  // X_{-1} is a point
  auto in_range = [&](int p, int q) { return max_total < 0 || p + q <= max_total; };

  std::vector<std::vector<std::size_t>> dims(static_cast<std::size_t>(max_p) + 1,
                                             std::vector<std::size_t>(static_cast<std::size_t>(max_q) + 1, 0));
  for (int p = 0; p <= max_p; ++p)
    for (int q = 0; q <= max_q; ++q)
      if (in_range(p, q)) dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          checked_power(n, p, level_size(q), budget, p, q);
  DoubleComplex dc = DoubleComplex::with_dims(std::move(dims));
  if (max_total >= 0) dc.truncated_at = max_total;

  // Mixed-radix digits of a tuple index, most significant first.
  auto digits = [&](std::size_t idx, int len) {
    std::vector<grp::ElementId> d(static_cast<std::size_t>(len));
    for (int i = len - 1; i >= 0; --i) {
      d[static_cast<std::size_t>(i)] = static_cast<grp::ElementId>(idx % n);
      idx /= n;
    }
    return d;
  };
  auto index_of = [&](const std::vector<grp::ElementId>& d) {
    std::size_t idx = 0;
    for (auto e : d) idx = idx * n + e;
    return idx;
  };
  auto act_point = [&](int q, grp::ElementId h, std::size_t s) -> std::size_t {
    if (q == 0) return 0;
    return a.act(q - 1, h, static_cast<ss::SimplexId>(s));
  };

  for (int p = 0; p < max_p; ++p)
    for (int q = 0; q <= max_q; ++q) {
      if (dc.dim(p + 1, q) == 0 || dc.dim(p, q) == 0) continue;
      auto& m = dc.horiz[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      const std::size_t xs = level_size(q);
      const std::size_t tuples = dc.dim(p + 1, q) / xs;
      for (std::size_t ti = 0; ti < tuples; ++ti) {
        const auto h = digits(ti, p + 1);
        const grp::ElementId h1inv = g.inv(h[0]);
        std::vector<grp::ElementId> shifted(static_cast<std::size_t>(p));
        for (int k = 1; k <= p; ++k) shifted[static_cast<std::size_t>(k) - 1] = g.mul(h1inv, h[static_cast<std::size_t>(k)]);
        const std::size_t shifted_idx = index_of(shifted);
        std::vector<std::size_t> deleted_idx(static_cast<std::size_t>(p) + 1);
        for (int i = 1; i <= p + 1; ++i) {
          std::vector<grp::ElementId> del;
          for (int k = 0; k <= p; ++k)
            if (k != i - 1) del.push_back(h[static_cast<std::size_t>(k)]);
          deleted_idx[static_cast<std::size_t>(i) - 1] = index_of(del);
        }
        for (std::size_t s = 0; s < xs; ++s) {
          const std::size_t row = ti * xs + s;
          m.add(row, shifted_idx * xs + act_point(q, h1inv, s), 1);
          for (int i = 1; i <= p + 1; ++i)
            m.add(row, deleted_idx[static_cast<std::size_t>(i) - 1] * xs + s, i % 2 == 0 ? 1 : -1);
        }
      }
    }

  for (int p = 0; p <= max_p; ++p)
    for (int q = 0; q < max_q; ++q) {
      if (dc.dim(p, q + 1) == 0 || dc.dim(p, q) == 0) continue;
      auto& m = dc.vert[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      const std::size_t xs = level_size(q);
      const std::size_t ys = level_size(q + 1);
      const std::size_t tuples = dc.dim(p, q) / xs;
      for (std::size_t ti = 0; ti < tuples; ++ti)
        for (std::size_t y = 0; y < ys; ++y) {
          const std::size_t row = ti * ys + y;
          if (q == 0) {
            m.add(row, ti, 1);
            continue;
          }
          auto f = x.faces(q, static_cast<ss::SimplexId>(y));
          for (std::size_t i = 0; i < f.size(); ++i) m.add(row, ti * xs + f[i], i % 2 == 0 ? 1 : -1);
        }
    }
  return dc;
}

std::vector<std::size_t> bar_cohomology_dims(const grp::FiniteGroup& g, const std::vector<grp::ElementId>& subgroup,
                                             int up_to, std::size_t budget) {
  const std::size_t n = subgroup.size();
  if (n == 0) throw InvalidGroup("empty subgroup");
  std::map<grp::ElementId, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos.emplace(subgroup[i], i);
  auto mul = [&](std::size_t a, std::size_t b) {
    auto it = pos.find(g.mul(subgroup[a], subgroup[b]));
    if (it == pos.end()) throw InvalidGroup("element list is not closed under multiplication");
    return it->second;
  };
  // C^k = functions on H^k; one extra degree so that H^{up_to} is exact.
  la::CochainComplex c;
  c.first_degree = 0;
  for (int k = 0; k <= up_to + 1; ++k) c.dims.push_back(checked_power(n, k, 1, budget, k, 0));
  auto digits = [&](std::size_t idx, int len) {
    std::vector<std::size_t> d(static_cast<std::size_t>(len));
    for (int i = len - 1; i >= 0; --i) {
      d[static_cast<std::size_t>(i)] = idx % n;
      idx /= n;
    }
    return d;
  };
  auto index_of = [&](const std::vector<std::size_t>& d) {
    std::size_t idx = 0;
    for (auto e : d) idx = idx * n + e;
    return idx;
  };
  for (int k = 0; k <= up_to; ++k) {
    la::RationalMatrix d(c.dims[static_cast<std::size_t>(k) + 1], c.dims[static_cast<std::size_t>(k)]);
    for (std::size_t row = 0; row < d.rows(); ++row) {
      const auto h = digits(row, k + 1);
      // (df)(h_1..h_{k+1}) = f(h_2..) + sum (-1)^i f(.., h_i h_{i+1}, ..) + (-1)^{k+1} f(h_1..h_k)
      d.add(row, index_of({h.begin() + 1, h.end()}), 1);
      for (int i = 1; i <= k; ++i) {
        std::vector<std::size_t> m;
        for (int j = 0; j <= k; ++j) {
          if (j == i - 1) {
            m.push_back(mul(h[static_cast<std::size_t>(j)], h[static_cast<std::size_t>(j) + 1]));
            ++j;
          } else {
            m.push_back(h[static_cast<std::size_t>(j)]);
          }
        }
        d.add(row, index_of(m), i % 2 == 0 ? 1 : -1);
      }
      d.add(row, index_of({h.begin(), h.end() - 1}), (k + 1) % 2 == 0 ? 1 : -1);
    }
    c.differentials.push_back(std::move(d));
  }
  auto h = la::cohomology(c);
  h.pop_back();
  return h;
}

}  // namespace qss::spec
