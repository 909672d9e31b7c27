#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qind {

// Exact rational number on int64, always normalized (gcd 1, positive
// denominator). Scores and weights are kept exact end to end; rounding
// happens only in display formatting.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value);  // NOLINT: implicit by design, levels are ints
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "3", "-2.50" and "n/d" forms. No exponents.
  static std::optional<Rational> parse(std::string_view text);
  // Like parse() but throws InputError with the offending text.
  static Rational parse_or_throw(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const = default;
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const;
  // Canonical form: "3", "-5/2". Used in serialized artifacts.
  std::string to_string() const;
  // Fixed-point rendering, round half away from zero: "2.50".
  std::string to_decimal(int places) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace qind
