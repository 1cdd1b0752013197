#include <algorithm>
#include <stdexcept>

#include "qss/exactla.hpp"

namespace qss::la {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

std::size_t bit_length(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

void add_scaled(SparseVector& dst, const SparseVector& src, const Rational& factor) {
  if (src.empty() || sgn(factor) == 0) return;
  SparseVector out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() || b != src.end()) {
    if (b == src.end() || (a != dst.end() && a->col < b->col)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == dst.end() || b->col < a->col) {
      out.push_back({b->col, factor * b->value});
      ++b;
    } else {
      Rational v = a->value + factor * b->value;
      if (sgn(v) != 0) out.push_back({a->col, std::move(v)});
      ++a;
      ++b;
    }
  }
  dst = std::move(out);
}

Rational entry_of(const SparseVector& v, std::size_t col) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != v.end() && it->col == col) return it->value;
  return 0;
}

SparseVector sparse_from_dense(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (sgn(dense[i]) != 0) v.push_back({i, dense[i]});
  return v;
}

std::vector<Rational> dense_from_sparse(const SparseVector& v, std::size_t dim) {
  std::vector<Rational> d(dim);
  for (const auto& e : v) d.at(e.col) = e.value;
  return d;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, 1});
  return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeMismatch("ragged dense matrix");
    m.data_[r] = sparse_from_dense(rows[r]);
  }
  return m;
}

std::size_t RationalMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void RationalMatrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw IndexOutOfRange("matrix index out of range");
}

Rational RationalMatrix::at(std::size_t r, std::size_t c) const {
  check_index(r, c);
  return entry_of(data_[r], c);
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  check_index(r, c);
  Rational value = v;
  value.canonicalize();
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    if (sgn(value) == 0) row.erase(it);
    else it->value = std::move(value);
  } else if (sgn(value) != 0) {
    row.insert(it, Entry{c, std::move(value)});
  }
}

void RationalMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (sgn(v) == 0) return;
  set(r, c, at(r, c) + v);
}

void RationalMatrix::set_row(std::size_t r, SparseVector v) {
  if (r >= rows_) throw IndexOutOfRange("row index out of range");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].col >= cols_) throw IndexOutOfRange("column index out of range");
    if (i > 0 && v[i - 1].col >= v[i].col) throw std::invalid_argument("unsorted sparse row");
    if (sgn(v[i].value) == 0) throw std::invalid_argument("explicit zero in sparse row");
    v[i].value.canonicalize();
  }
  data_[r] = std::move(v);
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r]) t.data_[e.col].push_back({r, e.value});
  return t;
}

SparseVector RationalMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto& row = data_[r];
    Rational acc = 0;
    auto a = row.begin();
    auto b = v.begin();
    while (a != row.end() && b != v.end()) {
      if (a->col < b->col) ++a;
      else if (b->col < a->col) ++b;
      else {
        acc += a->value * b->value;
        ++a;
        ++b;
      }
    }
    if (sgn(acc) != 0) out.push_back({r, std::move(acc)});
  }
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ShapeMismatch("matrix product shape mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    SparseVector acc;
    for (const auto& e : data_[r]) add_scaled(acc, rhs.data_[e.col], e.value);
    out.data_[r] = std::move(acc);
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeMismatch("matrix sum shape mismatch");
  RationalMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) add_scaled(out.data_[r], rhs.data_[r], 1);
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeMismatch("matrix difference shape mismatch");
  RationalMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) add_scaled(out.data_[r], rhs.data_[r], -1);
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
  if (sgn(s) == 0) return RationalMatrix(rows_, cols_);
  RationalMatrix out = *this;
  for (auto& row : out.data_)
    for (auto& e : row) e.value *= s;
  return out;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<std::size_t>& row_ids,
                                         const std::vector<std::size_t>& col_ids) const {
  std::vector<std::ptrdiff_t> col_map(cols_, -1);
  for (std::size_t j = 0; j < col_ids.size(); ++j) {
    if (col_ids[j] >= cols_) throw IndexOutOfRange("submatrix column out of range");
    col_map[col_ids[j]] = static_cast<std::ptrdiff_t>(j);
  }
  RationalMatrix out(row_ids.size(), col_ids.size());
  for (std::size_t i = 0; i < row_ids.size(); ++i) {
    if (row_ids[i] >= rows_) throw IndexOutOfRange("submatrix row out of range");
    SparseVector row;
    for (const auto& e : data_[row_ids[i]])
      if (col_map[e.col] >= 0) row.push_back({static_cast<std::size_t>(col_map[e.col]), e.value});
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    out.data_[i] = std::move(row);
  }
  return out;
}

std::vector<Rational> RationalMatrix::column_l1_norms() const {
  std::vector<Rational> norms(cols_);
  for (const auto& row : data_)
    for (const auto& e : row) norms[e.col] += abs(e.value);
  return norms;
}

std::vector<std::vector<Rational>> RationalMatrix::to_dense() const {
  std::vector<std::vector<Rational>> d;
  d.reserve(rows_);
  for (const auto& row : data_) d.push_back(dense_from_sparse(row, cols_));
  return d;
}

std::vector<std::tuple<std::size_t, std::size_t, Rational>> RationalMatrix::triplets() const {
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r]) t.emplace_back(r, e.col, e.value);
  return t;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

namespace {

std::vector<Rational> to_dense_row(const SparseVector& v, std::size_t cols) {
  std::vector<Rational> out(cols);
  for (const auto& e : v) out[e.col] = e.value;
  return out;
}

std::size_t dense_rank_inplace(std::vector<std::vector<Rational>>& a, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t best = a.size();
    std::size_t best_bits = 0;
    for (std::size_t r = rank; r < a.size(); ++r) {
      if (sgn(a[r][c]) == 0) continue;
      const std::size_t bits = bit_length(a[r][c]);
      if (best == a.size() || bits < best_bits) {
        best = r;
        best_bits = bits;
      }
    }
    if (best == a.size()) continue;
    std::swap(a[rank], a[best]);
    const Rational inv = 1 / a[rank][c];
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (sgn(a[r][c]) == 0) continue;
      const Rational f = a[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k)
        if (sgn(a[rank][k]) != 0) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_dense(const RationalMatrix& m) {
  auto a = m.to_dense();
  return dense_rank_inplace(a, m.cols());
}

std::size_t rank(const RationalMatrix& m) {
  // Eliminate along the shorter side; switch to dense once the stored rows
  // are more than half full.
  if (m.rows() > m.cols()) return rank(m.transpose());
  ForwardEchelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.row(r).empty()) continue;
    ech.insert(m.row(r));
    if (ech.rank() > 8 && 2 * ech.nonzeros() > ech.rank() * m.cols()) {
      std::vector<std::vector<Rational>> dense;
      for (const auto& row : ech.rows()) dense.push_back(to_dense_row(row, m.cols()));
      for (std::size_t k = r + 1; k < m.rows(); ++k) dense.push_back(to_dense_row(m.row(k), m.cols()));
      return dense_rank_inplace(dense, m.cols());
    }
  }
  return ech.rank();
}

std::vector<SparseVector> kernel_basis(const RationalMatrix& m) {
  RowEchelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots()) is_pivot[p] = true;
  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVector v{{f, 1}};
    for (std::size_t i = 0; i < ech.rank(); ++i) {
      Rational x = entry_of(ech.rows()[i], f);
      if (sgn(x) != 0) v.push_back({ech.pivots()[i], -x});
    }
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qss::la
