#include <algorithm>
#include <sstream>

#include "qss/exactla.hpp"

namespace qss::la {

std::size_t CochainComplex::dim_at(int degree) const {
  if (degree < first_degree || degree > last_degree()) return 0;
  return dims[static_cast<std::size_t>(degree - first_degree)];
}

void CochainComplex::check() const {
  if (!dims.empty() && differentials.size() + 1 != dims.size())
    throw ShapeMismatch("cochain complex needs one differential per adjacent pair of terms");
  if (dims.empty() && !differentials.empty()) throw ShapeMismatch("differentials without terms");
  for (std::size_t k = 0; k < differentials.size(); ++k) {
    const auto& d = differentials[k];
    if (d.cols() != dims[k] || d.rows() != dims[k + 1]) {
      std::ostringstream os;
      os << "differential out of degree " << first_degree + static_cast<int>(k) << " has shape "
         << d.rows() << "x" << d.cols() << ", expected " << dims[k + 1] << "x" << dims[k];
      throw ShapeMismatch(os.str());
    }
  }
  for (std::size_t k = 0; k + 1 < differentials.size(); ++k) {
    if (!(differentials[k + 1] * differentials[k]).is_zero()) {
      std::ostringstream os;
      os << "d o d != 0 at degree " << first_degree + static_cast<int>(k);
      throw ComplexInvalid(os.str());
    }
  }
}

std::vector<std::size_t> cohomology(const CochainComplex& c) {
  try {
    c.check();
  } catch (const ShapeMismatch& e) {
    throw ComplexInvalid(e.what());
  }
  std::vector<std::size_t> ranks;
  ranks.reserve(c.differentials.size());
  for (const auto& d : c.differentials) ranks.push_back(rank(d));
  std::vector<std::size_t> h(c.dims.size());
  for (std::size_t k = 0; k < c.dims.size(); ++k) {
    const std::size_t out = k < ranks.size() ? ranks[k] : 0;
    const std::size_t in = k > 0 ? ranks[k - 1] : 0;
    h[k] = c.dims[k] - out - in;
  }
  return h;
}

std::vector<std::size_t> cohomology_dims(const CochainComplex& c) {
  auto all = cohomology(c);
  if (c.first_degree >= 0) return all;
  const auto skip = static_cast<std::size_t>(-c.first_degree);
  if (skip >= all.size()) return {};
  return {all.begin() + static_cast<std::ptrdiff_t>(skip), all.end()};
}

ExtInt acyclicity_degree(const CochainComplex& c) {
  const auto h = cohomology_dims(c);
  for (std::size_t l = 0; l < h.size(); ++l) {
    if (h[l] != 0) return l == 0 ? ExtInt::neg_inf() : ExtInt(static_cast<std::int64_t>(l) - 1);
  }
  return ExtInt::pos_inf();
}

HomotopyReport verify_l1_homotopy(const CochainComplex& cochain, const ChainHomotopy& h, int up_to) {
  cochain.check();
  if (h.maps.size() != h.bounds.size())
    throw ShapeMismatch("one bound C_k is required per homotopy map h_k");
  if (h.first_degree != cochain.first_degree)
    throw ShapeMismatch("homotopy and complex start in different degrees");

  // Chain boundary d_k : C_{k+1} -> C_k is the transpose of the cochain
  // differential out of degree k.
  auto boundary = [&](int k) -> RationalMatrix {
    const int idx = k - cochain.first_degree;
    if (idx >= 0 && static_cast<std::size_t>(idx) < cochain.differentials.size())
      return cochain.differentials[static_cast<std::size_t>(idx)].transpose();
    return RationalMatrix(cochain.dim_at(k), cochain.dim_at(k + 1));
  };
  auto homotopy = [&](int k) -> RationalMatrix {
    const int idx = k - h.first_degree;
    if (idx >= 0 && static_cast<std::size_t>(idx) < h.maps.size()) return h.maps[static_cast<std::size_t>(idx)];
    return RationalMatrix(cochain.dim_at(k + 1), cochain.dim_at(k));
  };

  for (std::size_t i = 0; i < h.maps.size(); ++i) {
    const int k = h.first_degree + static_cast<int>(i);
    const auto& m = h.maps[i];
    if (m.cols() != cochain.dim_at(k) || m.rows() != cochain.dim_at(k + 1)) {
      std::ostringstream os;
      os << "h_" << k << " has shape " << m.rows() << "x" << m.cols() << ", expected "
         << cochain.dim_at(k + 1) << "x" << cochain.dim_at(k);
      throw ShapeMismatch(os.str());
    }
    if (sgn(h.bounds[i]) < 0) throw ShapeMismatch("negative l1 bound");
  }

  HomotopyReport report;
  const int last = std::max(up_to, h.first_degree + static_cast<int>(h.maps.size()) - 1);
  for (int k = cochain.first_degree; k <= last; ++k) {
    HomotopyDegreeResult res;
    res.degree = k;
    res.identity_holds = true;
    if (k <= up_to) {
      const RationalMatrix lhs = boundary(k) * homotopy(k);
      RationalMatrix sum = lhs;
      if (k > cochain.first_degree) sum = sum + homotopy(k - 1) * boundary(k - 1);
      res.identity_holds = sum == RationalMatrix::identity(cochain.dim_at(k));
      if (!res.identity_holds) {
        std::ostringstream os;
        os << "homotopy identity fails in degree " << k;
        report.failures.push_back(os.str());
      }
    }
    const int idx = k - h.first_degree;
    res.bound_holds = true;
    if (idx >= 0 && static_cast<std::size_t>(idx) < h.maps.size()) {
      const auto norms = h.maps[static_cast<std::size_t>(idx)].column_l1_norms();
      const Rational& bound = h.bounds[static_cast<std::size_t>(idx)];
      for (std::size_t col = 0; col < norms.size(); ++col) {
        if (norms[col] > res.max_column_norm) res.max_column_norm = norms[col];
        if (norms[col] > bound && !res.offending_simplex) {
          res.bound_holds = false;
          res.offending_simplex = col;
          std::ostringstream os;
          os << "l1 bound violated in degree " << k << " at simplex " << col << ": "
             << format_rational(norms[col]) << " > " << format_rational(bound);
          report.failures.push_back(os.str());
        }
      }
    }
    report.degrees.push_back(std::move(res));
  }
  report.passed = report.failures.empty();
  return report;
}

}  // namespace qss::la
