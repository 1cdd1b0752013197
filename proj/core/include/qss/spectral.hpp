#pragma once

// First-quadrant double complexes over Q, their totalization, both filtration
// spectral sequences with explicit page bases and differentials, the
// invariant double complex of a group action and the structural checks on its
// spectral sequence.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qss/exactla.hpp"
#include "qss/groupaction.hpp"

namespace qss::spec {

inline constexpr std::size_t kDefaultBudget = 20000;

/// Cell dimension cap, read from QSS_BUDGET when set and positive.
std::size_t budget_from_env();

/// Cells (p,q) for 0 <= p < num_p(), 0 <= q < num_q(). horiz[p][q] maps (p,q)
/// to (p+1,q) and vert[p][q] maps (p,q) to (p,q+1); maps leaving the grid have
/// zero rows. The total differential is d_H + (-1)^p d_V.
struct DoubleComplex {
  std::vector<std::vector<std::size_t>> dims;
  std::vector<std::vector<la::RationalMatrix>> horiz;
  std::vector<std::vector<la::RationalMatrix>> vert;
  /// When >= 0, every cell with p+q above this degree was dropped; the total
  /// complex is then the quotient by those cells and its cohomology is only
  /// exact below this degree.
  int truncated_at = -1;

  /// Zero maps of the right shapes.
  static DoubleComplex with_dims(std::vector<std::vector<std::size_t>> dims);

  int num_p() const { return static_cast<int>(dims.size()); }
  int num_q() const { return dims.empty() ? 0 : static_cast<int>(dims[0].size()); }
  std::size_t dim(int p, int q) const;
  /// Highest total degree carried by the grid.
  int max_total() const;
  /// Highest total degree whose cohomology is exact.
  int exact_through() const;

  /// Throws ShapeMismatch for wrong shapes, ComplexInvalid when d_H^2, d_V^2
  /// or d_H d_V - d_V d_H is nonzero.
  void check() const;
};

/// Total complex in degrees 0..max_total. Within a degree, cells are laid out
/// by increasing p.
struct TotalComplex {
  la::CochainComplex complex;
  /// offset[t][p] is the first coordinate of cell (p, t-p) in degree t.
  std::vector<std::vector<std::size_t>> offset;
};
TotalComplex totalize(const DoubleComplex& dc);

/// Cohomology of the total complex in degrees 0..up_to (zero past the grid).
std::vector<std::size_t> total_cohomology(const DoubleComplex& dc, int up_to);

/// Vertical: filtered by columns, d_0 = d_V, E_1^{p,q} = H^q(column p).
/// Horizontal: filtered by rows, d_0 = d_H, E_1 is the row cohomology; cells
/// are then indexed (p, q) = (row, column).
enum class Filtration { Vertical, Horizontal };
std::string to_string(Filtration f);
Filtration parse_filtration(const std::string& s);

struct SpectralPage {
  int r = 1;
  /// dims[p][q] in the filtration's indexing.
  std::vector<std::vector<std::size_t>> dims;
  /// d[p][q] : E_r^{p,q} -> E_r^{p+r,q-r+1}, zero rows when the target is
  /// outside the grid.
  std::vector<std::vector<la::RationalMatrix>> d;
};

struct SpectralSequence {
  Filtration filtration = Filtration::Vertical;
  int num_p = 0;
  int num_q = 0;
  int exact_through = -1;
  std::vector<SpectralPage> pages;
  std::vector<std::vector<std::size_t>> e_infinity;
  /// Least r with d_s = 0 for every s >= r on the exact range.
  int stable_page = 1;

  const SpectralPage& page(int r) const;
  std::size_t dim(int r, int p, int q) const;
  std::size_t e_inf(int p, int q) const;
  /// Sum of E_infinity along each total degree 0..exact_through.
  std::vector<std::size_t> e_infinity_totals() const;
};

/// Pages 1..max(up_to_page, filtration length + 1); the last one equals
/// E_infinity. Throws ComplexInvalid when dc is invalid.
SpectralSequence spectral_sequence(const DoubleComplex& dc, Filtration filtration, int up_to_page = 2);

/// d_r o d_r = 0 and dim E_{r+1} = dim ker d_r - dim im d_r on every exact
/// cell of every computed page. Empty when consistent.
std::vector<std::string> page_consistency_failures(const SpectralSequence& ss);

/// Invariant functions on G^{p+1} x X_{q-1}, stored on the orbit
/// representatives (e, g_1, .., g_p, x) with index (g_1..g_p in mixed radix)
/// * |X_{q-1}| + x; X_{-1} is a point. Cells with p+q > max_total are
/// dropped when max_total >= 0. Throws BudgetExceeded naming the first cell
/// whose dimension exceeds the budget.
DoubleComplex build_group_double_complex(const grp::GroupAction& a, int max_p, int max_q, int max_total = -1,
                                         std::size_t budget = kDefaultBudget);

/// Cohomology of the subgroup H < G with rational coefficients in degrees
/// 0..up_to, from the inhomogeneous bar complex.
std::vector<std::size_t> bar_cohomology_dims(const grp::FiniteGroup& g, const std::vector<grp::ElementId>& subgroup,
                                             int up_to, std::size_t budget = kDefaultBudget);

struct TheoremACheck {
  std::string name;
  bool applicable = true;
  bool passed = true;
  /// Largest index (degree or column) the check covered, -1 when none.
  int covered_through = -1;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

enum class BottomMap { Zero, Isomorphism, Injective, Other };
std::string to_string(BottomMap m);

struct TheoremAReport {
  bool passed = true;
  bool partial = false;
  ExtInt gamma0;
  ExtInt tau0;
  int truncation = 0;
  int exact_through = -1;
  std::vector<TheoremACheck> checks;
  /// Classification of d_1^{p,0} for p = 0..; index p.
  std::vector<BottomMap> bottom_row;
  SpectralSequence sequence;
};

/// Builds the invariant double complex of f's action through total degree
/// max(gamma0, tau0) + 2 (lowered until every cell fits the budget) and checks
/// on the row-filtration spectral sequence: (i) E_inf^t = 0 for
/// t <= gamma0 + 1; (ii) dim E_1^{p,q} = dim H^q(H_{p-1}); (iii) E_2^{p,0} = 0
/// for p <= tau0 + 1; (iv/v) d_1^{p,0} is zero for odd p, an isomorphism for
/// even p <= tau0 and injective at p = tau0 + 1 when even.
TheoremAReport verify_theorem_A(const grp::FlaggedAction& f, ExtInt gamma0, ExtInt tau0,
                                std::size_t budget = kDefaultBudget);

}  // namespace qss::spec
