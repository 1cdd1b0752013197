#include "qss/ext_int.hpp"

#include <charconv>
#include <stdexcept>

namespace qss {

std::int64_t ExtInt::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("ExtInt::value() on an infinite value");
  return value_;
}

std::string ExtInt::to_string() const {
  switch (kind_) {
    case Kind::PosInf: return "inf";
    case Kind::NegInf: return "-inf";
    case Kind::Finite: break;
  }
  return std::to_string(value_);
}

std::optional<ExtInt> ExtInt::parse(const std::string& s) {
  if (s == "inf" || s == "+inf" || s == "infinity") return pos_inf();
  if (s == "-inf" || s == "-infinity") return neg_inf();
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return ExtInt(v);
}

std::ostream& operator<<(std::ostream& os, const ExtInt& v) { return os << v.to_string(); }

}  // namespace qss
