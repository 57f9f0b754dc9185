#include "rational.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace md {

namespace {

using UInt = unsigned __int128;

constexpr UInt kMaxMag = (UInt{1} << 127) - 1;  // |value| must stay below 2^127

UInt magnitude(__int128 v) { return v < 0 ? UInt{0} - UInt(v) : UInt(v); }

UInt gcd_u(UInt a, UInt b) {
  while (b != 0) {
    UInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

__int128 checked_mul(__int128 a, __int128 b) {
  if (a == 0 || b == 0) return 0;
  UInt ma = magnitude(a), mb = magnitude(b);
  if (ma > kMaxMag / mb) throw std::overflow_error("rational: multiplication overflow");
  UInt m = ma * mb;
  bool neg = (a < 0) != (b < 0);
  return neg ? -__int128(m) : __int128(m);
}

__int128 checked_add(__int128 a, __int128 b) {
  if ((b > 0 && a > __int128(kMaxMag) - b) || (b < 0 && a < -__int128(kMaxMag) - b))
    throw std::overflow_error("rational: addition overflow");
  return a + b;
}

// Compares a/b with c/d for a,c >= 0 and b,d > 0 using Euclidean descent.
int cmp_nonneg(UInt a, UInt b, UInt c, UInt d) {
  for (;;) {
    UInt q1 = a / b, q2 = c / d;
    if (q1 != q2) return q1 < q2 ? -1 : 1;
    UInt r1 = a % b, r2 = c % d;
    if (r1 == 0 && r2 == 0) return 0;
    if (r1 == 0) return -1;
    if (r2 == 0) return 1;
    // compare r1/b vs r2/d, i.e. inverted d/r2 vs b/r1
    a = d;
    UInt old_b = b;
    b = r2;
    c = old_b;
    d = r1;
  }
}

}  // namespace

Rational::Rational(long long num, long long den) { *this = make(num, den); }

Rational Rational::make(Int num, Int den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  UInt g = gcd_u(magnitude(num), magnitude(den));
  Rational r;
  if (g > 1) {
    num = num < 0 ? -__int128(magnitude(num) / g) : __int128(magnitude(num) / g);
    den = __int128(UInt(den) / g);
  }
  r.num_ = num;
  r.den_ = den;
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  Int g = Int(gcd_u(UInt(den_), UInt(o.den_)));
  Int b1 = den_ / g, d1 = o.den_ / g;
  Int num = checked_add(checked_mul(num_, d1), checked_mul(o.num_, b1));
  Int den = checked_mul(b1, o.den_);
  return make(num, den);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  UInt g1 = gcd_u(magnitude(num_), UInt(o.den_));
  UInt g2 = gcd_u(UInt(den_), magnitude(o.num_));
  Int a = num_ / Int(g1), d = o.den_ / Int(g1);
  Int c = o.num_ / Int(g2), b = den_ / Int(g2);
  return make(checked_mul(a, c), checked_mul(b, d));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::domain_error("rational: division by zero");
  Rational inv;
  inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
  inv.den_ = Int(magnitude(o.num_));
  return *this * inv;
}

int Rational::compare(const Rational& o) const {
  int s1 = sign(), s2 = o.sign();
  if (s1 != s2) return s1 < s2 ? -1 : 1;
  if (s1 == 0) return 0;
  int c = cmp_nonneg(magnitude(num_), UInt(den_), magnitude(o.num_), UInt(o.den_));
  return s1 > 0 ? c : -c;
}

Rational::Int Rational::floor() const {
  if (num_ >= 0) return num_ / den_;
  Int q = num_ / den_;
  if (q * den_ != num_) --q;
  return q;
}

Rational Rational::abs() const {
  Rational r;
  r.num_ = num_ < 0 ? -num_ : num_;
  r.den_ = den_;
  return r;
}

std::string int128_to_string(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  UInt m = magnitude(v);
  std::string s;
  while (m > 0) {
    s.push_back(char('0' + int(m % 10)));
    m /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

std::string Rational::str() const {
  std::string s = int128_to_string(num_);
  if (den_ != 1) {
    s.push_back('/');
    s += int128_to_string(den_);
  }
  return s;
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    size_t used = 0;
    if (slash == std::string::npos) {
      long long n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing characters");
      return Rational(n);
    }
    long long n = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("bad numerator");
    std::string den_part = text.substr(slash + 1);
    long long d = std::stoll(den_part, &used);
    if (used != den_part.size()) throw std::invalid_argument("bad denominator");
    return Rational(n, d);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational: component out of range: " + text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace md
