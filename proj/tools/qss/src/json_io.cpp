#include "qss_cli/json_io.hpp"

#include <stdexcept>

namespace qss::cli {

Json ext_to_json(const ExtInt& v) {
  if (v.is_pos_inf()) return "inf";
  if (v.is_neg_inf()) return "-inf";
  return v.value();
}

ExtInt ext_from_json(const Json& j) {
  if (j.is_number_integer()) return ExtInt(j.get<std::int64_t>());
  if (j.is_string())
    if (auto v = ExtInt::parse(j.get<std::string>())) return *v;
  throw std::invalid_argument("expected an integer or \"inf\"/\"-inf\", got " + j.dump());
}

la::Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return la::Rational(j.get<long>());
  if (j.is_string()) return la::parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational \"num/den\" or an integer, got " + j.dump());
}

Json matrix_to_json(const la::RationalMatrix& m) {
  Json entries = Json::array();
  for (const auto& [r, c, v] : m.triplets()) entries.push_back(Json::array({r, c, la::format_rational(v)}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

la::RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("matrix must be an object with rows, cols, entries");
  la::RationalMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  if (j.contains("entries")) {
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 3) throw std::invalid_argument("matrix entry must be [row, col, value]");
      const auto r = e[0].get<std::size_t>();
      const auto c = e[1].get<std::size_t>();
      if (r >= m.rows() || c >= m.cols())
        throw std::invalid_argument("matrix entry (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
      m.add(r, c, rational_from_json(e[2]));
    }
  }
  return m;
}

}  // namespace qss::cli
