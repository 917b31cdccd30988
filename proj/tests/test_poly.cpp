#include "polarize/poly.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace polarize;
using testing::random_poly1;
using testing::random_poly2_total;
using testing::random_ratio;

namespace {

Poly1 rose_x_expanded() {
  return Poly1::from_terms({{1, 4}, {3, -64}, {5, 120}, {7, -64}, {9, 4}});
}

Poly1 rose_denominator() {
  // (1 + t^2)^5
  return Poly1::from_terms({{0, 1}, {2, 5}, {4, 10}, {6, 10}, {8, 5}, {10, 1}});
}

}  // namespace

TEST_SUITE_BEGIN("poly");

TEST_CASE("building from terms sums duplicates and drops cancellations") {
  const Poly1 p = Poly1::from_terms({{2, 3}, {2, -1}, {0, 5}});
  CHECK(p.coeff(2) == Ratio(2));
  CHECK(p.coeff(0) == Ratio(5));
  CHECK(p.terms().size() == 2);

  const Poly1 cancelled = Poly1::from_terms({{4, Ratio(BigInt(7), BigInt(3))},
                                             {4, Ratio(BigInt(-7), BigInt(3))}});
  CHECK(cancelled.is_zero());
  CHECK(cancelled.degree() == kZeroDegree);
  CHECK_THROWS_AS(Poly1::monomial(-1, 1), std::invalid_argument);
}

TEST_CASE("univariate evaluation") {
  CHECK(rose_x_expanded().eval(1) == Ratio(0));  // the (1 - t^2) factor forces it
  CHECK(Poly1().eval(5) == Ratio(0));
  CHECK(Poly1::constant(7).eval(Ratio(BigInt(-3), BigInt(2))) == Ratio(7));
  CHECK(rose_denominator().eval(1) == Ratio(32));
}

TEST_CASE("bivariate evaluation") {
  // Enneper x(u, v) = u - u^3/3 + u v^2
  const Poly2 x = Poly2::from_terms(
      {{{1, 0}, 1}, {{3, 0}, Ratio(BigInt(-1), BigInt(3))}, {{1, 2}, 1}});
  CHECK(x.eval(1, 0) == Ratio(BigInt(2), BigInt(3)));
  CHECK(x.eval(0, 5) == Ratio(0));
  CHECK(Poly2().eval(2, 3) == Ratio(0));
}

TEST_CASE("eval of a product equals the product of evals") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Poly1 a = random_poly1(rng, 6);
    const Poly1 b = random_poly1(rng, 6);
    const Ratio t = random_ratio(rng);
    CHECK((a * b).eval(t) == a.eval(t) * b.eval(t));

    const Poly2 c = random_poly2_total(rng, 4);
    const Poly2 d = random_poly2_total(rng, 4);
    const Ratio u = random_ratio(rng);
    const Ratio v = random_ratio(rng);
    CHECK((c * d).eval(u, v) == c.eval(u, v) * d.eval(u, v));
  }
}

TEST_CASE("degrees") {
  CHECK(rose_x_expanded().degree() == 9);
  CHECK(rose_denominator().degree() == 10);

  const Poly2 p = Poly2::from_terms({{{3, 2}, 1}, {{1, 4}, -2}});
  CHECK(p.maxdeg_u() == 3);
  CHECK(p.maxdeg_v() == 4);
  CHECK(p.total_degree() == 5);
}

TEST_CASE("rational map validation and degrees") {
  CHECK_THROWS_AS(CurveMap({}), std::invalid_argument);
  CHECK_THROWS_AS(CurveMap({Poly1::variable()}, Poly1()), std::invalid_argument);

  const CurveMap rose({rose_x_expanded()}, rose_denominator());
  CHECK(curve_degree(rose) == 10);
  CHECK_FALSE(rose.is_polynomial());

  const CurveMap constant({Poly1::constant(1)});
  CHECK(curve_degree(constant) == 0);
  CHECK(constant.is_polynomial());

  const SurfaceMap patch({Poly2::from_terms({{{1, 2}, 16}, {{3, 2}, -16}})},
                         Poly2::from_terms({{{0, 0}, 1}, {{2, 0}, 2}, {{4, 0}, 1}}));
  CHECK(bidegree(patch) == std::pair<int, int>{4, 2});
  CHECK(total_degree(patch) == 5);
}

TEST_CASE("canonical text") {
  CHECK(Poly1().str() == "0");
  CHECK(rose_x_expanded().str() == "4 t - 64 t^3 + 120 t^5 - 64 t^7 + 4 t^9");
  // Exp2 keys sort lexicographically on (u, v)
  const Poly2 p = Poly2::from_terms(
      {{{1, 0}, 1}, {{3, 0}, Ratio(BigInt(-1), BigInt(3))}, {{1, 2}, 1}});
  CHECK(p.str() == "u + u v^2 - 1/3 u^3");
}

TEST_SUITE_END();
