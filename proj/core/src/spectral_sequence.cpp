#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <optional>
#include <tuple>

#include "qss/spectral.hpp"

namespace qss::spec {

using la::Rational;
using la::SparseVector;

std::string to_string(Filtration f) { return f == Filtration::Vertical ? "vertical" : "horizontal"; }

Filtration parse_filtration(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "vertical" || t == "v" || t == "columns") return Filtration::Vertical;
  if (t == "horizontal" || t == "h" || t == "rows") return Filtration::Horizontal;
  throw std::invalid_argument("unknown filtration '" + s + "'");
}

const SpectralPage& SpectralSequence::page(int r) const {
  if (r < 1 || static_cast<std::size_t>(r) > pages.size())
    throw IndexOutOfRange("page " + std::to_string(r) + " was not computed");
  return pages[static_cast<std::size_t>(r) - 1];
}

std::size_t SpectralSequence::dim(int r, int p, int q) const {
  if (p < 0 || q < 0 || p >= num_p || q >= num_q) return 0;
  return page(r).dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

std::size_t SpectralSequence::e_inf(int p, int q) const {
  if (p < 0 || q < 0 || p >= num_p || q >= num_q) return 0;
  return e_infinity[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

std::vector<std::size_t> SpectralSequence::e_infinity_totals() const {
  std::vector<std::size_t> out;
  for (int t = 0; t <= exact_through; ++t) {
    std::size_t s = 0;
    for (int p = 0; p <= t; ++p) s += e_inf(p, t - p);
    out.push_back(s);
  }
  return out;
}

namespace {

// Echelon form whose rows carry a lift in the total complex; row operations
// are mirrored on the lifts.
class LiftedEchelon {
 public:
  explicit LiftedEchelon(std::size_t dim = 0) : ech_(dim) {}

  void insert(const SparseVector& v, SparseVector lift) {
    la::ForwardEchelon::Multipliers used;
    if (!ech_.insert(v, &used)) return;
    for (const auto& [i, x] : used) la::add_scaled(lift, lifts_[i], -x);
    for (auto& e : lift) e.value *= ech_.last_scale();
    lifts_.push_back(std::move(lift));
  }
  void append_unit(std::size_t col, SparseVector lift) {
    ech_.append_unit(col);
    lifts_.push_back(std::move(lift));
  }
  std::size_t rank() const { return ech_.rank(); }
  const la::ForwardEchelon& echelon() const { return ech_; }
  const std::vector<SparseVector>& lifts() const { return lifts_; }

 private:
  la::ForwardEchelon ech_;
  std::vector<SparseVector> lifts_;
};

// E_r^p in one total degree: a basis of pi_p(Z_r^p) modulo pi_p(B_r^p) in the
// coordinates of the graded piece, with lifts to Z_r^p.
struct Cell {
  std::size_t ambient = 0;  // dimension of the graded piece
  la::ForwardEchelon denominator;
  LiftedEchelon reps;

  std::size_t dim() const { return reps.rank(); }

  std::vector<Rational> coordinates(const SparseVector& y) const {
    la::ForwardEchelon::Multipliers used;
    const SparseVector r = reps.echelon().reduce(denominator.reduce(y), &used);
    if (!r.empty()) throw std::logic_error("page differential left the cycle space");
    std::vector<Rational> c(reps.rank());
    for (const auto& [i, x] : used) c[i] += x;
    return c;
  }
};

class Engine {
 public:
  Engine(const DoubleComplex& dc, Filtration filt) : dc_(dc), filt_(filt), tc_(totalize(dc)) {
    top_ = dc.max_total();
    len_ = filt == Filtration::Vertical ? dc.num_p() : dc.num_q();
  }

  int top() const { return top_; }
  int filtration_length() const { return len_; }

  // Cell of filtration index f in degree t, in double-complex coordinates.
  std::pair<int, int> cell_of(int t, int f) const {
    return filt_ == Filtration::Vertical ? std::make_pair(f, t - f) : std::make_pair(t - f, f);
  }
  std::size_t cell_dim(int t, int f) const {
    if (f < 0 || f > t) return 0;
    auto [a, b] = cell_of(t, f);
    return dc_.dim(a, b);
  }
  std::size_t cell_offset(int t, int f) const {
    auto [a, b] = cell_of(t, f);
    (void)b;
    return tc_.offset[static_cast<std::size_t>(t)][static_cast<std::size_t>(a)];
  }
  std::size_t total_dim(int t) const { return t < 0 || t > top_ ? 0 : tc_.complex.dims[static_cast<std::size_t>(t)]; }

  // Coordinates of degree t in filtration indices [lo, hi).
  std::vector<std::size_t> coords(int t, int lo, int hi) const {
    std::vector<std::size_t> out;
    if (t < 0 || t > top_) return out;
    for (int f = std::max(lo, 0); f < std::min(hi, t + 1); ++f) {
      const std::size_t n = cell_dim(t, f);
      if (n == 0) continue;
      const std::size_t off = cell_offset(t, f);
      for (std::size_t i = 0; i < n; ++i) out.push_back(off + i);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  SparseVector apply_d(int t, const SparseVector& x) const {
    if (t >= top_) return {};
    return tc_.complex.differentials[static_cast<std::size_t>(t)].apply(x);
  }

  // Restriction to filtration index f of a degree-t vector, in local coordinates.
  SparseVector project(int t, int f, const SparseVector& v) const {
    SparseVector out;
    const std::size_t n = cell_dim(t, f);
    if (n == 0) return out;
    const std::size_t off = cell_offset(t, f);
    for (const auto& e : v)
      if (e.col >= off && e.col < off + n) out.push_back({e.col - off, e.value});
    return out;
  }

  // {x in F^p C^t : Dx in F^{p+r} C^{t+1}}, as vectors in C^t. The flag
  // `full` reports that this is all of F^p C^t.
  std::tuple<int, int, int> cycles_key(int r, int p, int t) const {
    const int lo = std::max(p, 0);
    const int hi = t >= top_ ? lo : std::min(p + r, t + 2);
    return {lo, std::max(hi, lo), t};
  }

  const std::pair<std::vector<SparseVector>, bool>& cycles(int r, int p, int t) {
    const auto key = cycles_key(r, p, t);
    const auto [lo, hi, tt] = key;
    (void)tt;
    if (auto it = z_cache_.find(key); it != z_cache_.end()) return it->second;
    const auto cols = coords(t, lo, t + 1);
    const auto rows = coords(t + 1, lo, hi);
    std::pair<std::vector<SparseVector>, bool> out;
    la::RationalMatrix sub;
    bool full = rows.empty() || t >= top_;
    if (!full) {
      sub = tc_.complex.differentials[static_cast<std::size_t>(t)].submatrix(rows, cols);
      full = sub.is_zero();
    }
    out.second = full;
    if (full) {
      for (auto c : cols) out.first.push_back({{c, Rational(1)}});
    } else {
      for (const auto& k : la::kernel_basis(sub)) {
        SparseVector lifted;
        for (const auto& e : k) lifted.push_back({cols[e.col], e.value});
        std::sort(lifted.begin(), lifted.end(), [](const la::Entry& a, const la::Entry& b) { return a.col < b.col; });
        out.first.push_back(std::move(lifted));
      }
    }
    return z_cache_.emplace(key, std::move(out)).first->second;
  }

  // Late pages repeat earlier cells once the filtration windows saturate.
  const Cell& cell(int r, int p, int t) {
    const auto key = std::make_tuple(p, cycles_key(r, p, t), cycles_key(r - 1, p - r + 1, t - 1));
    if (auto it = cell_cache_.find(key); it != cell_cache_.end()) return it->second;
    return cell_cache_.emplace(key, build_cell(r, p, t)).first->second;
  }

 private:
  Cell build_cell(int r, int p, int t) {
    Cell cell;
    cell.ambient = cell_dim(t, p);
    cell.denominator = la::ForwardEchelon(cell.ambient);
    cell.reps = LiftedEchelon(cell.ambient);
    if (cell.ambient == 0) return cell;
    // Boundaries D Z_{r-1}^{p-r+1}(t-1), projected to the graded piece.
    if (t >= 1) {
      for (const auto& z : cycles(r - 1, p - r + 1, t - 1).first) {
        auto v = project(t, p, apply_d(t - 1, z));
        if (!v.empty()) cell.denominator.insert(v);
      }
    }
    const auto& [zs, full] = cycles(r, p, t);
    if (full) {
      // Every vector of the graded piece is a cycle: complement the pivots.
      const std::size_t off = cell_offset(t, p);
      for (std::size_t j = 0; j < cell.ambient; ++j)
        if (!cell.denominator.is_pivot(j)) cell.reps.append_unit(j, {{off + j, Rational(1)}});
    } else {
      for (const auto& z : zs) {
        auto v = cell.denominator.reduce(project(t, p, z));
        if (!v.empty()) cell.reps.insert(v, z);
      }
    }
    return cell;
  }

  const DoubleComplex& dc_;
  Filtration filt_;
  TotalComplex tc_;
  int top_ = -1;
  int len_ = 0;
  std::map<std::tuple<int, int, int>, std::pair<std::vector<SparseVector>, bool>> z_cache_;
  std::map<std::tuple<int, std::tuple<int, int, int>, std::tuple<int, int, int>>, Cell> cell_cache_;
};

}  // namespace

SpectralSequence spectral_sequence(const DoubleComplex& dc, Filtration filtration, int up_to_page) {
  dc.check();
  Engine eng(dc, filtration);
  SpectralSequence ss;
  ss.filtration = filtration;
  ss.num_p = filtration == Filtration::Vertical ? dc.num_p() : dc.num_q();
  ss.num_q = filtration == Filtration::Vertical ? dc.num_q() : dc.num_p();
  ss.exact_through = dc.exact_through();
  const int top = eng.top();
  const int last = std::max({up_to_page, eng.filtration_length() + 1, 1});

  auto in_grid = [&](int p, int q) { return p >= 0 && q >= 0 && p < ss.num_p && q < ss.num_q && p + q <= top; };

  for (int r = 1; r <= last; ++r) {
    SpectralPage page;
    page.r = r;
    page.dims.assign(static_cast<std::size_t>(ss.num_p), std::vector<std::size_t>(static_cast<std::size_t>(ss.num_q), 0));
    std::map<std::pair<int, int>, const Cell*> cells;
    for (int p = 0; p < ss.num_p; ++p)
      for (int q = 0; q < ss.num_q; ++q) {
        if (!in_grid(p, q)) continue;
        const Cell& cell = eng.cell(r, p, p + q);
        page.dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = cell.dim();
        cells.emplace(std::make_pair(p, q), &cell);
      }
    page.d.resize(static_cast<std::size_t>(ss.num_p));
    for (int p = 0; p < ss.num_p; ++p)
      for (int q = 0; q < ss.num_q; ++q) {
        const std::size_t src = page.dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
        const int tp = p + r, tq = q - r + 1;
        const bool has_target = in_grid(tp, tq);
        const std::size_t dst = has_target ? page.dims[static_cast<std::size_t>(tp)][static_cast<std::size_t>(tq)] : 0;
        la::RationalMatrix m(dst, src);
        if (src > 0 && dst > 0) {
          const Cell& from = *cells.at({p, q});
          const Cell& to = *cells.at({tp, tq});
          const int t = p + q;
          for (std::size_t j = 0; j < src; ++j) {
            const auto image = eng.project(t + 1, tp, eng.apply_d(t, from.reps.lifts()[j]));
            const auto c = to.coordinates(image);
            for (std::size_t i = 0; i < c.size(); ++i)
              if (sgn(c[i]) != 0) m.set(i, j, c[i]);
          }
        }
        page.d[static_cast<std::size_t>(p)].push_back(std::move(m));
      }
    ss.pages.push_back(std::move(page));
  }
  ss.e_infinity = ss.pages.back().dims;

  ss.stable_page = last;
  for (int r = last; r >= 1; --r) {
    bool zero = true;
    const auto& page = ss.pages[static_cast<std::size_t>(r) - 1];
    for (int p = 0; p < ss.num_p && zero; ++p)
      for (int q = 0; q < ss.num_q && zero; ++q)
        if (p + q <= ss.exact_through && !page.d[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)].is_zero())
          zero = false;
    if (!zero) break;
    ss.stable_page = r;
  }
  return ss;
}

std::vector<std::string> page_consistency_failures(const SpectralSequence& ss) {
  std::vector<std::string> out;
  auto d_at = [&](const SpectralPage& pg, int p, int q) -> const la::RationalMatrix* {
    if (p < 0 || q < 0 || p >= ss.num_p || q >= ss.num_q) return nullptr;
    return &pg.d[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  };
  for (std::size_t k = 0; k < ss.pages.size(); ++k) {
    const auto& pg = ss.pages[k];
    const int r = pg.r;
    for (int p = 0; p < ss.num_p; ++p)
      for (int q = 0; q < ss.num_q; ++q) {
        if (p + q > ss.exact_through) continue;
        std::ostringstream where;
        where << "page " << r << " cell (" << p << "," << q << ")";
        const auto* out_map = d_at(pg, p, q);
        const auto* next = d_at(pg, p + r, q - r + 1);
        if (out_map && next && next->cols() == out_map->rows() && next->cols() > 0 &&
            !((*next) * (*out_map)).is_zero())
          out.push_back("d_r o d_r != 0 at " + where.str());
        if (k + 1 < ss.pages.size()) {
          const std::size_t ker = ss.dim(r, p, q) - la::rank(*out_map);
          const auto* in_map = d_at(pg, p - r, q + r - 1);
          const std::size_t im = in_map ? la::rank(*in_map) : 0;
          if (ss.dim(r + 1, p, q) != ker - im)
            out.push_back("dim E_{r+1} != dim ker - dim im at " + where.str());
        }
      }
  }
  return out;
}

}  // namespace qss::spec
