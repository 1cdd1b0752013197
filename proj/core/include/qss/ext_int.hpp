#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace qss {

/// An integer extended by the two infinities, with a total order
/// -inf < n < +inf. Arithmetic with a finite shift keeps infinities fixed:
/// inf - j = inf, -inf - j = -inf.
class ExtInt {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : kind_(Kind::Finite), value_(v) {}  // NOLINT: implicit by design of the domain

  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }
  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  /// Finite value; throws std::logic_error for infinities.
  std::int64_t value() const;

  constexpr std::strong_ordering operator<=>(const ExtInt& o) const {
    if (kind_ != o.kind_) return static_cast<int>(kind_) <=> static_cast<int>(o.kind_);
    if (kind_ != Kind::Finite) return std::strong_ordering::equal;
    return value_ <=> o.value_;
  }
  constexpr bool operator==(const ExtInt& o) const { return (*this <=> o) == 0; }

  constexpr ExtInt operator+(std::int64_t j) const {
    return kind_ == Kind::Finite ? ExtInt(value_ + j) : *this;
  }
  constexpr ExtInt operator-(std::int64_t j) const {
    return kind_ == Kind::Finite ? ExtInt(value_ - j) : *this;
  }

  std::string to_string() const;  // "inf", "-inf" or the decimal value
  static std::optional<ExtInt> parse(const std::string& s);

 private:
  constexpr explicit ExtInt(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  std::int64_t value_ = 0;
};

constexpr ExtInt min(const ExtInt& a, const ExtInt& b) { return b < a ? b : a; }
constexpr ExtInt max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const ExtInt& v);

}  // namespace qss
