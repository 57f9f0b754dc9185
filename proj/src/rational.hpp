#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace md {

// Exact rational number with 128-bit magnitude bounds.  Stored normalized:
// den > 0 and gcd(|num|, den) = 1.  Arithmetic is checked; overflow throws
// std::overflow_error.  There is no floating-point fallback anywhere.
class Rational {
 public:
  using Int = __int128;

  Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT: implicit on purpose
  Rational(long long num, long long den);

  static Rational make(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Total order, exact (equivalent to cross-multiplication but never
  // overflows: uses a continued-fraction descent with divisions only).
  int compare(const Rational& o) const;
  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator<(const Rational& o) const { return compare(o) < 0; }
  bool operator<=(const Rational& o) const { return compare(o) <= 0; }
  bool operator>(const Rational& o) const { return compare(o) > 0; }
  bool operator>=(const Rational& o) const { return compare(o) >= 0; }

  // Largest integer <= value.
  Int floor() const;

  Rational abs() const;

  // "p" when den == 1, otherwise "p/q".
  std::string str() const;
  // Accepts "p" or "p/q" with components fitting in 64 bits.
  static Rational parse(const std::string& text);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

std::string int128_to_string(__int128 v);

}  // namespace md
