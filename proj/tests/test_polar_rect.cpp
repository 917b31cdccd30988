#include "polarize/polar_rect.hpp"

#include "polarize/combinatorics.hpp"
#include "polarize/oracle.hpp"
#include "polarize/polar_curve.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

using namespace polarize;
using testing::random_args;
using testing::random_poly2_bidegree;
using testing::random_ratio;

TEST_SUITE_BEGIN("polar_rect");

TEST_CASE("sigma table basics") {
  const SigmaTableRect ones({1, 1}, {1, 1});
  for (int h = 0; h <= 2; ++h) {
    for (int k = 0; k <= 2; ++k) {
      CHECK(ones.sigma(2, 2, h, k) == Ratio(binomial(2, h) * binomial(2, k)));
    }
  }

  const SigmaTableRect unit({0, 1}, {0, 1});
  CHECK(unit.sigma(2, 2, 1, 1) == Ratio(1));
  CHECK(unit.sigma(2, 2, 2, 2) == Ratio(0));
  CHECK(unit.sigma(2, 2, 0, 0) == Ratio(1));
}

TEST_CASE("a vanishing index set degenerates to the curve triangle") {
  std::mt19937 rng(21);
  const auto u_args = random_args(rng, 5);
  const SigmaTableRect table(u_args, {});
  const SigmaTableCurve curve(u_args);
  for (int i = 0; i <= 5; ++i) {
    for (int h = 0; h <= i; ++h) CHECK(table.sigma(i, 0, h, 0) == curve.sigma(i, h));
  }

  const auto v_args = random_args(rng, 4);
  const SigmaTableRect v_only({}, v_args);
  const SigmaTableCurve v_curve(v_args);
  for (int j = 0; j <= 4; ++j) {
    for (int k = 0; k <= j; ++k) CHECK(v_only.sigma(0, j, 0, k) == v_curve.sigma(j, k));
  }
}

TEST_CASE("polar values of concrete polynomials") {
  const Poly2 uv = Poly2::monomial(1, 1, 1);
  CHECK(polar_value_rect(uv, {0, 1}, {0, 1}) == Ratio(BigInt(1), BigInt(4)));

  std::mt19937 rng(22);
  const auto u_args = random_args(rng, 4);
  const auto v_args = random_args(rng, 3);
  CHECK(polar_value_rect(Poly2::constant(1), u_args, v_args) == Ratio(1));

  Ratio mean = 0;
  for (const Ratio& u : u_args) mean += u;
  mean /= Ratio(4);
  CHECK(polar_value_rect(Poly2::variable_u(), u_args, v_args) == mean);
}

TEST_CASE("recurrence equals the defining-sum oracle") {
  std::mt19937 rng(23);
  for (int p = 0; p <= 4; ++p) {
    for (int q = 0; q <= 4; ++q) {
      const auto u_args = random_args(rng, p);
      const auto v_args = random_args(rng, q);
      const SigmaTableRect table(u_args, v_args);
      for (int h = 0; h <= p; ++h) {
        for (int k = 0; k <= q; ++k) {
          CHECK(table.sigma(p, q, h, k) / Ratio(binomial(p, h) * binomial(q, k)) ==
                naive_polar_rect(h, k, u_args, v_args));
        }
      }
    }
  }
}

TEST_CASE("separate permutation symmetry") {
  std::mt19937 rng(24);
  auto u_args = random_args(rng, 4);
  auto v_args = random_args(rng, 3);
  const SigmaTableRect reference(u_args, v_args);
  for (int rep = 0; rep < 5; ++rep) {
    std::shuffle(u_args.begin(), u_args.end(), rng);
    std::shuffle(v_args.begin(), v_args.end(), rng);
    const SigmaTableRect shuffled(u_args, v_args);
    for (int h = 0; h <= 4; ++h) {
      for (int k = 0; k <= 3; ++k) {
        CHECK(shuffled.sigma(4, 3, h, k) == reference.sigma(4, 3, h, k));
      }
    }
  }
}

TEST_CASE("diagonal property reproduces the polynomial") {
  std::mt19937 rng(25);
  for (int rep = 0; rep < 20; ++rep) {
    const Poly2 p2 = random_poly2_bidegree(rng, 3, 2);
    const Ratio u = random_ratio(rng);
    const Ratio v = random_ratio(rng);
    CHECK(polar_value_rect(p2, std::vector<Ratio>(3, u), std::vector<Ratio>(2, v)) ==
          p2.eval(u, v));
  }
}

TEST_CASE("tensor factorization through two curve tables") {
  std::mt19937 rng(26);
  for (int rep = 0; rep < 15; ++rep) {
    const int p = 1 + rep % 4;
    const int q = 1 + (rep / 2) % 4;
    const auto u_args = random_args(rng, p);
    const auto v_args = random_args(rng, q);
    const SigmaTableRect table(u_args, v_args);
    const SigmaTableCurve u_curve(u_args);
    const SigmaTableCurve v_curve(v_args);
    for (int h = 0; h <= p; ++h) {
      for (int k = 0; k <= q; ++k) {
        CHECK(table.sigma(p, q, h, k) == u_curve.sigma(p, h) * v_curve.sigma(q, k));
      }
    }
  }
}

TEST_CASE("direct f-recurrence agrees with sigma-then-divide") {
  std::mt19937 rng(27);
  for (int rep = 0; rep < 15; ++rep) {
    const int p = rep % 5;
    const int q = (rep / 2) % 5;
    const auto u_args = random_args(rng, p);
    const auto v_args = random_args(rng, q);
    const SigmaTableRect table(u_args, v_args);
    const auto f = direct_polar_grid_rect(u_args, v_args);
    for (int h = 0; h <= p; ++h) {
      for (int k = 0; k <= q; ++k) {
        CHECK(f[h][k] == table.sigma(p, q, h, k) / Ratio(binomial(p, h) * binomial(q, k)));
      }
    }
  }
}

TEST_CASE("control nets of simple maps") {
  const FramePair unit{AffineFrame1(0, 1), AffineFrame1(0, 1)};

  const RectNet bilinear = rect_control_net(SurfaceMap({Poly2::monomial(1, 1, 1)}), 1, 1, unit);
  CHECK(bilinear.at(0, 0).coords[0] == Ratio(0));
  CHECK(bilinear.at(0, 1).coords[0] == Ratio(0));
  CHECK(bilinear.at(1, 0).coords[0] == Ratio(0));
  CHECK(bilinear.at(1, 1).coords[0] == Ratio(1));

  const RectNet plane = rect_control_net(
      SurfaceMap({Poly2::variable_u() + Poly2::variable_v()}), 1, 1, unit);
  CHECK(plane.at(0, 0).coords[0] == Ratio(0));
  CHECK(plane.at(0, 1).coords[0] == Ratio(1));
  CHECK(plane.at(1, 0).coords[0] == Ratio(1));
  CHECK(plane.at(1, 1).coords[0] == Ratio(2));

  const RectNet uusq = rect_control_net(SurfaceMap({Poly2::monomial(2, 1, 1)}), 2, 1, unit);
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= 1; ++j) {
      CHECK(uusq.at(i, j).coords[0] == (i == 2 && j == 1 ? Ratio(1) : Ratio(0)));
    }
  }

  CHECK_THROWS_AS(rect_control_net(SurfaceMap({Poly2::monomial(2, 1, 1)}), 1, 1, unit),
                  std::invalid_argument);
}

TEST_CASE("corner interpolation") {
  std::mt19937 rng(28);
  for (int rep = 0; rep < 10; ++rep) {
    const Poly2 x = random_poly2_bidegree(rng, 3, 2);
    const SurfaceMap map({x});
    const FramePair frames{AffineFrame1(random_ratio(rng), Ratio(10) + random_ratio(rng)),
                           AffineFrame1(random_ratio(rng), Ratio(10) + random_ratio(rng))};
    const RectNet net = rect_control_net(map, 3, 2, frames);
    CHECK(net.at(0, 0).coords[0] == x.eval(frames.u.r, frames.v.r));
    CHECK(net.at(3, 2).coords[0] == x.eval(frames.u.s, frames.v.s));
    CHECK(net.at(0, 2).coords[0] == x.eval(frames.u.r, frames.v.s));
    CHECK(net.at(3, 0).coords[0] == x.eval(frames.u.s, frames.v.r));
  }
}

TEST_CASE("closed form matches the table over zero/one argument multisets") {
  for (int p = 0; p <= 5; ++p) {
    for (int q = 0; q <= 5; ++q) {
      for (int zeros_u = 0; zeros_u <= p; ++zeros_u) {
        for (int zeros_v = 0; zeros_v <= q; ++zeros_v) {
          std::vector<Ratio> u_args(zeros_u, 0);
          u_args.insert(u_args.end(), p - zeros_u, 1);
          std::vector<Ratio> v_args(zeros_v, 0);
          v_args.insert(v_args.end(), q - zeros_v, 1);
          const SigmaTableRect table(u_args, v_args);
          for (int h = 0; h <= p; ++h) {
            for (int k = 0; k <= q; ++k) {
              CHECK(closed_form_rect(p, q, zeros_u, zeros_v, h, k) ==
                    table.sigma(p, q, h, k) / Ratio(binomial(p, h) * binomial(q, k)));
            }
          }
        }
      }
    }
  }
  // frozen spot values
  CHECK(closed_form_rect(2, 2, 1, 1, 1, 1) == Ratio(BigInt(1), BigInt(4)));
  CHECK(closed_form_rect(3, 4, 0, 0, 2, 3) == Ratio(1));
  CHECK(closed_form_rect(4, 2, 3, 0, 2, 1) == Ratio(0));  // h > p - zeros_u
}

TEST_CASE("cell and update counts") {
  std::mt19937 rng(29);
  for (int p = 0; p <= 5; ++p) {
    for (int q = 0; q <= 5; ++q) {
      const SigmaTableRect table(random_args(rng, p), random_args(rng, q));
      const auto tri = [](int n) { return static_cast<std::size_t>(n) * (n + 1) / 2; };
      CHECK(table.cell_count() == tri(p + 1) * tri(q + 1));
      CHECK(table.update_count() ==
            tri(p + 1) * tri(q + 1) - static_cast<std::size_t>(p + 1) * (q + 1));
    }
  }
}

TEST_SUITE_END();
