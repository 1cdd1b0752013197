#pragma once

// Exact linear algebra over the rationals: sparse matrices, rank, kernels,
// incremental reduced row echelon forms, quotient spaces, cochain complexes
// and the l1-homotopy verifier.

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "qss/errors.hpp"
#include "qss/ext_int.hpp"

namespace qss::la {

using Rational = mpq_class;

/// Parses "a", "-a" or "a/b" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

/// Bits of numerator plus bits of denominator; the pivoting cost.
std::size_t bit_length(const Rational& q);

struct Entry {
  std::size_t col;
  Rational value;
  bool operator==(const Entry&) const = default;
};

/// Sorted by column, no stored zeros.
using SparseVector = std::vector<Entry>;

/// dst += factor * src
void add_scaled(SparseVector& dst, const SparseVector& src, const Rational& factor);
Rational entry_of(const SparseVector& v, std::size_t col);
SparseVector sparse_from_dense(const std::vector<Rational>& dense);
std::vector<Rational> dense_from_sparse(const SparseVector& v, std::size_t dim);

/// Row-major sparse rational matrix. Absent entries are zero and every stored
/// entry is a nonzero canonical rational with in-range indices.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);

  const SparseVector& row(std::size_t r) const { return data_[r]; }
  void set_row(std::size_t r, SparseVector v);

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix scaled(const Rational& s) const;
  /// Image of a vector given in source coordinates.
  SparseVector apply(const SparseVector& v) const;

  /// Rows and columns selected by index lists, in the order given.
  RationalMatrix submatrix(const std::vector<std::size_t>& row_ids,
                           const std::vector<std::size_t>& col_ids) const;

  /// Sum of absolute values of column entries, for every column.
  std::vector<Rational> column_l1_norms() const;

  std::vector<std::vector<Rational>> to_dense() const;
  /// (row, col, value) triplets in row-major order.
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> triplets() const;

  bool operator==(const RationalMatrix& o) const;

 private:
  void check_index(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

/// Exact rank. Sparse forward elimination along the shorter side with pivots of
/// least bit length; switches to dense storage once the stored rows are more
/// than half full.
std::size_t rank(const RationalMatrix& m);
/// Dense-only elimination, kept as an independent route for cross-checks.
std::size_t rank_dense(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one sparse vector per free column.
std::vector<SparseVector> kernel_basis(const RationalMatrix& m);

/// Incrementally maintained reduced row echelon form of a subspace of Q^dim.
/// Every stored row has a pivot entry equal to 1 and zeros in the pivot
/// columns of all other rows.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the stored rows; zero iff v is in the span.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  /// Returns true when v enlarged the span.
  bool insert(const SparseVector& v);

 private:
  std::size_t dim_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;
  std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

/// Row echelon form without back substitution: every stored row has a 1 in
/// its pivot column and vanishes in the pivot columns of earlier rows.
/// Keeps large sparse spans sparse where RowEchelon fills in.
class ForwardEchelon {
 public:
  using Multipliers = std::vector<std::pair<std::size_t, Rational>>;

  explicit ForwardEchelon(std::size_t dim = 0) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_pivot(std::size_t col) const { return pivot_row_.count(col) != 0; }

  /// v minus a combination of stored rows, zero in every pivot column. With
  /// `used`, the pairs (row, c) such that v = sum c * row + result are appended.
  SparseVector reduce(const SparseVector& v, Multipliers* used = nullptr) const;
  /// Stores the normalised reduction of v; returns its row index, or nullopt
  /// when v was already in the span.
  std::optional<std::size_t> insert(const SparseVector& v, Multipliers* used = nullptr);
  /// Stores e_col; col must not be a pivot yet.
  std::size_t append_unit(std::size_t col);
  /// Scale applied to the last inserted row.
  const Rational& last_scale() const { return last_scale_; }
  /// Total stored entries.
  std::size_t nonzeros() const;

 private:
  std::size_t dim_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;
  std::unordered_map<std::size_t, std::size_t> pivot_row_;
  Rational last_scale_ = 1;
};

/// Explicit basis of span(numerator) / span(denominator), assuming the
/// denominator lies in the numerator span.
class Quotient {
 public:
  Quotient() = default;
  Quotient(std::size_t dim, const std::vector<SparseVector>& numerator,
           const std::vector<SparseVector>& denominator);

  std::size_t dim() const { return reps_.rank(); }
  std::size_t ambient_dim() const { return denominator_.dim(); }
  const std::vector<SparseVector>& representatives() const { return reps_.rows(); }
  const RowEchelon& denominator() const { return denominator_; }

  /// Coordinates of v modulo the denominator in the representative basis.
  /// Returns nullopt when v is not in span(numerator) + span(denominator).
  std::optional<std::vector<Rational>> coordinates(const SparseVector& v) const;

 private:
  RowEchelon denominator_;
  RowEchelon reps_;
};

/// Finite cochain complex. Term k sits in degree first_degree + k and
/// differentials[k] maps term k to term k+1 (shape dims[k+1] x dims[k]).
/// Augmented complexes use first_degree = -1 with a one-dimensional term.
struct CochainComplex {
  int first_degree = -1;
  std::vector<std::size_t> dims;
  std::vector<RationalMatrix> differentials;

  int last_degree() const { return first_degree + static_cast<int>(dims.size()) - 1; }
  std::size_t dim_at(int degree) const;
  /// Throws ShapeMismatch on wrong shapes and ComplexInvalid when d o d != 0.
  void check() const;
};

/// Cohomology dimensions in every degree first_degree..last_degree.
std::vector<std::size_t> cohomology(const CochainComplex& c);
/// Cohomology dimensions in degrees 0..last_degree (reduced cohomology for
/// augmented complexes).
std::vector<std::size_t> cohomology_dims(const CochainComplex& c);
/// Largest g with vanishing cohomology in degrees 0..g; +inf if all vanish,
/// -inf if degree 0 already fails.
ExtInt acyclicity_degree(const CochainComplex& c);

/// Maps h_k from chains of degree k to chains of degree k+1 on the dual chain
/// complex of a cochain complex; maps[i] is degree first_degree + i.
struct ChainHomotopy {
  int first_degree = -1;
  std::vector<RationalMatrix> maps;
  std::vector<Rational> bounds;
};

struct HomotopyDegreeResult {
  int degree = 0;
  bool identity_holds = false;
  bool bound_holds = false;
  Rational max_column_norm;
  std::optional<std::size_t> offending_simplex;
};

struct HomotopyReport {
  bool passed = false;
  std::vector<HomotopyDegreeResult> degrees;
  std::vector<std::string> failures;
};

/// Checks d_k h_k + h_{k-1} d_{k-1} = 1 on chains of degree k for every
/// k <= up_to, where d_k is the transpose of the cochain differential out of
/// degree k, and checks every supplied h_k against its column l1 bound.
HomotopyReport verify_l1_homotopy(const CochainComplex& cochain, const ChainHomotopy& h, int up_to);

}  // namespace qss::la
