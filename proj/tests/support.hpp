#pragma once

#include "polarize/frames.hpp"
#include "polarize/poly.hpp"
#include "polarize/ratio.hpp"

#include <random>
#include <vector>

namespace polarize::testing {

// Small random rationals keep the exact arithmetic in the property tests
// fast while still exercising carries and sign handling.
inline Ratio random_ratio(std::mt19937& rng, int num_range = 9, int den_range = 9) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return Ratio(BigInt(num(rng)), BigInt(den(rng)));
}

inline Ratio random_nonzero_ratio(std::mt19937& rng, int num_range = 9, int den_range = 9) {
  while (true) {
    Ratio r = random_ratio(rng, num_range, den_range);
    if (!r.is_zero()) return r;
  }
}

inline std::vector<Ratio> random_args(std::mt19937& rng, int count) {
  std::vector<Ratio> args;
  args.reserve(count);
  for (int i = 0; i < count; ++i) args.push_back(random_ratio(rng));
  return args;
}

inline std::vector<Point2> random_points(std::mt19937& rng, int count) {
  std::vector<Point2> args;
  args.reserve(count);
  for (int i = 0; i < count; ++i) args.push_back({random_ratio(rng), random_ratio(rng)});
  return args;
}

inline Poly1 random_poly1(std::mt19937& rng, int max_degree, int max_terms = 4) {
  std::uniform_int_distribution<int> exp(0, max_degree);
  std::uniform_int_distribution<int> terms(1, max_terms);
  Poly1 p;
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) p.add_term(exp(rng), random_ratio(rng));
  return p;
}

inline Poly2 random_poly2_bidegree(std::mt19937& rng, int max_u, int max_v, int max_terms = 5) {
  std::uniform_int_distribution<int> ue(0, max_u);
  std::uniform_int_distribution<int> ve(0, max_v);
  std::uniform_int_distribution<int> terms(1, max_terms);
  Poly2 p;
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) p.add_term({ue(rng), ve(rng)}, random_ratio(rng));
  return p;
}

inline Poly2 random_poly2_total(std::mt19937& rng, int max_total, int max_terms = 5) {
  std::uniform_int_distribution<int> he(0, max_total);
  std::uniform_int_distribution<int> terms(1, max_terms);
  Poly2 p;
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    const int h = he(rng);
    std::uniform_int_distribution<int> ke(0, max_total - h);
    p.add_term({h, ke(rng)}, random_ratio(rng));
  }
  return p;
}

}  // namespace polarize::testing
