#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace circsq {

/// Exact rational on int64, always reduced with positive denominator.
/// Verifiers and reports use this instead of floating point.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    return Rational{n / g, d / g};
  }

  friend bool operator==(const Rational& a, const Rational& b) = default;

  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num) * b.den;
    __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return of(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return of(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return of(a.num * b.num, a.den * b.den);
  }

  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace circsq
