#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rational.hpp"

using md::Rational;

TEST_CASE("construction normalizes") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(20, 13) - Rational(3, 2) == Rational(1, 26));
  CHECK(Rational(25, 11) * Rational(11, 5) == Rational(5));
  CHECK(Rational(3, 2) / Rational(9, 7) == Rational(7, 6));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("(a+b)-b == a on random values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    auto rnd = [&]() {
      long long num = (long long)(rng() % 2000001) - 1000000;
      long long den = 1 + (long long)(rng() % 1000000);
      return Rational(num, den);
    };
    Rational a = rnd(), b = rnd();
    CHECK((a + b) - b == a);
    CHECK((a * b).compare(b * a) == 0);
  }
}

TEST_CASE("comparison matches cross-multiplication") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5000; ++i) {
    long long a = (long long)(rng() % 200001) - 100000;
    long long b = 1 + (long long)(rng() % 100000);
    long long c = (long long)(rng() % 200001) - 100000;
    long long d = 1 + (long long)(rng() % 100000);
    int lhs = Rational(a, b).compare(Rational(c, d));
    __int128 x = (__int128)a * d, y = (__int128)c * b;
    int rhs = x < y ? -1 : (x > y ? 1 : 0);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("comparison is total and transitive on a fixed set") {
  std::vector<Rational> vals;
  for (int num = -6; num <= 6; ++num)
    for (int den = 1; den <= 6; ++den) vals.emplace_back(num, den);
  for (const auto& a : vals)
    for (const auto& b : vals) {
      CHECK(((a < b) + (a == b) + (b < a)) == 1);
      for (const auto& c : vals)
        if (a < b && b < c) CHECK(a < c);
    }
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational huge = Rational(1000000007, 1);
  for (int i = 0; i < 2; ++i) huge = huge * huge;  // ~1e36, still in range
  CHECK_THROWS_AS(huge * huge, std::overflow_error);
  Rational tiny = Rational(1, 1000000007);
  for (int i = 0; i < 2; ++i) tiny = tiny * tiny;
  CHECK_THROWS_AS(tiny * tiny, std::overflow_error);
  // comparisons never overflow even near the bound
  CHECK(huge > tiny);
  CHECK(tiny < Rational(1));
}

TEST_CASE("floor") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(4, 2).floor() == 2);
  CHECK(Rational(0).floor() == 0);
}

TEST_CASE("string round trip") {
  CHECK(Rational(25, 11).str() == "25/11");
  CHECK(Rational(2).str() == "2");
  CHECK(Rational(-3, 7).str() == "-3/7");
  CHECK(Rational::parse("25/11") == Rational(25, 11));
  CHECK(Rational::parse("-14/11") == Rational(-14, 11));
  CHECK(Rational::parse("3") == Rational(3));
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}
