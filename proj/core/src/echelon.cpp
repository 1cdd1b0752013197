#include <algorithm>
#include <stdexcept>

#include "qss/exactla.hpp"

namespace qss::la {

SparseVector RowEchelon::reduce(const SparseVector& v) const {
  // Rows vanish in each other's pivot columns, so the multipliers are read
  // straight off v.
  SparseVector out = v;
  for (const auto& e : v)
    if (auto it = pivot_row_.find(e.col); it != pivot_row_.end()) add_scaled(out, rows_[it->second], -e.value);
  return out;
}

bool RowEchelon::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  std::size_t best = 0;
  std::size_t best_bits = bit_length(r[0].value);
  for (std::size_t i = 1; i < r.size(); ++i) {
    const std::size_t bits = bit_length(r[i].value);
    if (bits < best_bits) {
      best = i;
      best_bits = bits;
    }
  }
  const std::size_t pcol = r[best].col;
  const Rational inv = 1 / r[best].value;
  for (auto& e : r) e.value *= inv;
  for (auto& row : rows_) {
    Rational x = entry_of(row, pcol);
    if (sgn(x) != 0) add_scaled(row, r, -x);
  }
  pivot_row_.emplace(pcol, rows_.size());
  rows_.push_back(std::move(r));
  pivots_.push_back(pcol);
  return true;
}

SparseVector ForwardEchelon::reduce(const SparseVector& v, Multipliers* used) const {
  // Row i vanishes at the pivots of rows before it, so one pass in insertion
  // order clears every pivot column.
  SparseVector out = v;
  for (std::size_t i = 0; i < rows_.size() && !out.empty(); ++i) {
    const Rational x = entry_of(out, pivots_[i]);
    if (sgn(x) == 0) continue;
    if (used) used->emplace_back(i, x);
    add_scaled(out, rows_[i], -x);
  }
  return out;
}

std::optional<std::size_t> ForwardEchelon::insert(const SparseVector& v, Multipliers* used) {
  SparseVector r = reduce(v, used);
  if (r.empty()) return std::nullopt;
  // Shortest entry; ties go to the rightmost column, which keeps fill low on
  // the group-indexed bases used here.
  std::size_t best = r.size() - 1;
  std::size_t best_bits = bit_length(r[best].value);
  for (std::size_t i = r.size() - 1; i-- > 0;) {
    const std::size_t bits = bit_length(r[i].value);
    if (bits < best_bits) {
      best = i;
      best_bits = bits;
    }
  }
  last_scale_ = 1 / r[best].value;
  for (auto& e : r) e.value *= last_scale_;
  const std::size_t idx = rows_.size();
  pivot_row_.emplace(r[best].col, idx);
  pivots_.push_back(r[best].col);
  rows_.push_back(std::move(r));
  return idx;
}

std::size_t ForwardEchelon::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

std::size_t ForwardEchelon::append_unit(std::size_t col) {
  if (is_pivot(col)) throw std::logic_error("append_unit on a pivot column");
  last_scale_ = 1;
  const std::size_t idx = rows_.size();
  pivot_row_.emplace(col, idx);
  pivots_.push_back(col);
  rows_.push_back({{col, Rational(1)}});
  return idx;
}

Quotient::Quotient(std::size_t dim, const std::vector<SparseVector>& numerator,
                   const std::vector<SparseVector>& denominator)
    : denominator_(dim), reps_(dim) {
  for (const auto& v : denominator) denominator_.insert(v);
  for (const auto& v : numerator) reps_.insert(denominator_.reduce(v));
}

std::optional<std::vector<Rational>> Quotient::coordinates(const SparseVector& v) const {
  SparseVector r = denominator_.reduce(v);
  std::vector<Rational> coords(reps_.rank());
  for (std::size_t i = 0; i < reps_.rank(); ++i) coords[i] = entry_of(r, reps_.pivots()[i]);
  if (!reps_.reduce(r).empty()) return std::nullopt;
  return coords;
}

}  // namespace qss::la
