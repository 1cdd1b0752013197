#pragma once

// JSON encodings shared by the project schema and the reports: extended
// integers as numbers or "inf"/"-inf", rationals as "num/den" strings and
// sparse matrices as triplet lists.

#include <optional>
#include <string>

#include <json.hpp>

#include "qss/exactla.hpp"
#include "qss/ext_int.hpp"

namespace qss::cli {

using Json = nlohmann::json;

Json ext_to_json(const ExtInt& v);
/// Accepts integers and the strings "inf", "+inf", "infinity", "-inf".
ExtInt ext_from_json(const Json& j);

Json matrix_to_json(const la::RationalMatrix& m);
/// {"rows": R, "cols": C, "entries": [[row, col, "num/den"], ...]}; values may
/// also be JSON integers.
la::RationalMatrix matrix_from_json(const Json& j);

la::Rational rational_from_json(const Json& j);

}  // namespace qss::cli

namespace nlohmann {

template <>
struct adl_serializer<qss::ExtInt> {
  static void to_json(json& j, const qss::ExtInt& v) { j = qss::cli::ext_to_json(v); }
  static void from_json(const json& j, qss::ExtInt& v) { v = qss::cli::ext_from_json(j); }
};

template <class T>
struct adl_serializer<std::optional<T>> {
  template <class J>
  static void to_json(J& j, const std::optional<T>& v) {
    if (v) j = *v;
    else j = nullptr;
  }
  template <class J>
  static void from_json(const J& j, std::optional<T>& v) {
    if (j.is_null()) v.reset();
    else v = j.template get<T>();
  }
};

}  // namespace nlohmann
