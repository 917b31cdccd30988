#include "polarize/combinatorics.hpp"
#include "polarize/ratio.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace polarize;
using testing::random_ratio;
using testing::random_nonzero_ratio;

TEST_SUITE_BEGIN("ratio");

TEST_CASE("basic arithmetic is exact and canonical") {
  CHECK(Ratio(BigInt(1), BigInt(3)) + Ratio(BigInt(1), BigInt(6)) == Ratio(BigInt(1), BigInt(2)));
  CHECK(Ratio(BigInt(2), BigInt(5)) * Ratio(BigInt(10), BigInt(9)) == Ratio(BigInt(4), BigInt(9)));
  CHECK((-Ratio(BigInt(3), BigInt(4))).str() == "-3/4");

  const Ratio r(BigInt(6), BigInt(-4));
  CHECK(r.str() == "-3/2");
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);

  CHECK(Ratio(0).denominator() == 1);
  CHECK((Ratio(BigInt(2), BigInt(4)) - Ratio(BigInt(1), BigInt(2))).denominator() == 1);
}

TEST_CASE("division by zero is an explicit error") {
  CHECK_THROWS_AS(Ratio(1) / Ratio(0), std::domain_error);
  CHECK_THROWS_AS(Ratio(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("text form round trips") {
  for (const char* text : {"0", "1", "-1", "2/5", "-14/45", "148/63", "331/210"}) {
    CHECK(Ratio::parse(text).str() == text);
  }
  CHECK(Ratio::parse("6/4").str() == "3/2");
  CHECK(Ratio::parse(" 10/9 ").str() == "10/9");
  CHECK_THROWS_AS(Ratio::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Ratio::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Ratio::parse("3/-4"), std::invalid_argument);
  CHECK_THROWS_AS(Ratio::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Ratio::parse("1.5"), std::invalid_argument);
}

TEST_CASE("field axioms hold exactly on random values") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 200; ++i) {
    const Ratio a = random_ratio(rng, 99, 99);
    const Ratio b = random_ratio(rng, 99, 99);
    const Ratio c = random_ratio(rng, 99, 99);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    const Ratio d = random_nonzero_ratio(rng, 99, 99);
    CHECK((a * d) / d == a);
  }
}

TEST_CASE("pow handles zero exponents and bases") {
  CHECK(pow(Ratio(0), 0) == Ratio(1));
  CHECK(pow(Ratio(BigInt(2), BigInt(3)), 3) == Ratio(BigInt(8), BigInt(27)));
  CHECK(pow(Ratio(-2), 5) == Ratio(-32));
  CHECK_THROWS_AS(pow(Ratio(2), -1), std::domain_error);
}

TEST_CASE("ordering") {
  CHECK(Ratio(BigInt(1), BigInt(3)) < Ratio(BigInt(1), BigInt(2)));
  CHECK(Ratio(-1) < Ratio(0));
}

TEST_CASE("binomial values and boundaries") {
  CHECK(binomial(10, 2) == 45);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(8, 0) == 1);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial satisfies the Pascal identity up to n = 64") {
  for (int n = 1; n <= 64; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
    }
  }
  // beyond the memo bound the multiplicative fallback must agree
  CHECK(binomial(70, 35) == binomial(69, 35) + binomial(69, 34));
}

TEST_CASE("multinomial3 equals the factorial formula for m <= 20") {
  auto factorial = [](int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  for (int m = 0; m <= 20; ++m) {
    for (int h = 0; h <= m; ++h) {
      for (int l = 0; h + l <= m; ++l) {
        CHECK(multinomial3(m, h, l) * factorial(h) * factorial(l) * factorial(m - h - l) ==
              factorial(m));
      }
    }
  }
  CHECK(multinomial3(8, 1, 1) == 56);
  CHECK(multinomial3(3, 0, 0) == 1);
  CHECK(multinomial3(4, 3, 2) == 0);
}

TEST_SUITE_END();
