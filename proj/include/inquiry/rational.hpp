#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "inquiry/errors.hpp"

namespace inquiry {

// Exact rational number on 64-bit numerator/denominator, kept canonical
// (denominator > 0, gcd(|num|, den) == 1). All arithmetic runs through
// 128-bit intermediates and throws std::overflow_error if a canonical
// result does not fit in 64 bits. Rule checking needs exact equality, so
// silent wraparound is not an option; the element-count caps keep every
// supported sweep orders of magnitude below the overflow threshold.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den) { *this = make(num, den); }

  static Rational make(__int128 num, __int128 den) {
    if (den == 0) throw invalid_input("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const auto g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    Rational r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw invalid_input("rational: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Canonical representation makes equality a field compare.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // "3/5", or just "3" for integers.
  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "3", "-3/5" and plain decimals like "0.25" or "1e-9".
  static Rational parse(const std::string& text);

  // Nearest rational with denominator 10^15; exact for short decimals.
  static Rational from_decimal(double value);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using i128 = __int128;

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("rational: value exceeds 64-bit range");
    return static_cast<std::int64_t>(v);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational Rational::from_decimal(double value) {
  constexpr double kScale = 1e15;
  const double scaled = value * kScale;
  if (scaled > 9.2e18 || scaled < -9.2e18)
    throw std::overflow_error("rational: decimal out of range");
  const auto num = static_cast<std::int64_t>(scaled >= 0 ? scaled + 0.5 : scaled - 0.5);
  return make(num, static_cast<std::int64_t>(kScale));
}

inline Rational Rational::parse(const std::string& text) {
  const auto parse_int = [&](const std::string& part) {
    std::size_t consumed = 0;
    const std::int64_t value = std::stoll(part, &consumed);
    if (consumed != part.size())
      throw std::invalid_argument("trailing characters");
    return value;
  };
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos)
      return make(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
        text.find('E') == std::string::npos) {
      return Rational(parse_int(text));
    }
    std::size_t consumed = 0;
    const double value = std::stod(text, &consumed);
    if (consumed != text.size()) throw std::invalid_argument("trailing characters");
    return from_decimal(value);
  } catch (const std::invalid_argument&) {
    throw invalid_input("rational: cannot parse '" + text + "'");
  } catch (const std::out_of_range&) {
    throw invalid_input("rational: value out of range '" + text + "'");
  }
}

}  // namespace inquiry
