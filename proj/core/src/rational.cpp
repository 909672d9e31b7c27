#include "qind/rational.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "qind/errors.hpp"

namespace qind {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw ContractViolation("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Normalizes in 128-bit space before narrowing back to int64.
Rational make_reduced(i128 num, i128 den) {
  if (den == 0) {
    throw ContractViolation("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(checked_narrow(num), checked_narrow(den));
}

void reduce_in_place(std::int64_t& num, std::int64_t& den) {
  if (den == 0) {
    throw ContractViolation("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  if (g > 1) {
    num = static_cast<std::int64_t>(num / g);
    den = static_cast<std::int64_t>(den / g);
  }
}

bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc{} && res.ptr == last;
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : num_(numerator), den_(denominator) {
  reduce_in_place(num_, den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t n = 0, d = 0;
    if (!parse_int(text.substr(0, slash), n)) return std::nullopt;
    if (!parse_int(text.substr(slash + 1), d)) return std::nullopt;
    if (d == 0) return std::nullopt;
    return Rational(n, d);
  }

  bool negative = false;
  std::string_view rest = text;
  if (rest.front() == '+' || rest.front() == '-') {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
    if (rest.empty()) return std::nullopt;
  }

  auto dot = rest.find('.');
  std::string_view int_part = dot == std::string_view::npos ? rest : rest.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  for (char c : int_part) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  for (char c : frac_part) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  if (frac_part.size() > 18) return std::nullopt;

  std::int64_t whole = 0;
  if (!int_part.empty() && !parse_int(int_part, whole)) return std::nullopt;

  i128 den = 1;
  for (size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  std::int64_t frac = 0;
  if (!frac_part.empty() && !parse_int(frac_part, frac)) return std::nullopt;

  i128 num = i128(whole) * den + frac;
  if (negative) num = -num;
  return make_reduced(num, den);
}

Rational Rational::parse_or_throw(std::string_view text) {
  auto r = parse(text);
  if (!r) {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  }
  return *r;
}

Rational Rational::operator+(const Rational& o) const {
  return make_reduced(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return make_reduced(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return make_reduced(i128(num_) * o.num_, i128(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) {
    throw ContractViolation("rational division by zero");
  }
  return make_reduced(i128(num_) * o.den_, i128(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return i128(num_) * o.den_ < i128(o.num_) * den_;
}

bool Rational::operator<=(const Rational& o) const {
  return i128(num_) * o.den_ <= i128(o.num_) * den_;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal(int places) const {
  i128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;

  i128 num = abs128(i128(num_)) * scale;
  i128 q = num / den_;
  i128 rem = num % den_;
  if (2 * rem >= den_) q += 1;

  std::string digits;
  if (q == 0) {
    digits = "0";
  } else {
    while (q > 0) {
      digits.insert(digits.begin(), static_cast<char>('0' + int(q % 10)));
      q /= 10;
    }
  }
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  std::string out;
  if (num_ < 0) out += '-';
  out += digits.substr(0, digits.size() - places);
  if (places > 0) {
    out += '.';
    out += digits.substr(digits.size() - places);
  }
  return out;
}

}  // namespace qind
