#pragma once

#include "polarize/frames.hpp"
#include "polarize/lift.hpp"
#include "polarize/nets.hpp"
#include "polarize/poly.hpp"
#include "polarize/ratio.hpp"

#include <cstddef>
#include <vector>

namespace polarize {

/// Four-index table of scaled bipolynomial polar values
/// sigma^{i,j}_{h,k}(u_1..u_i; v_1..v_j) of the monomials u^h v^k,
/// 0 <= h <= i <= p and 0 <= k <= j <= q. Cells come from
///
///   sigma^{i,j}_{h,k} = sigma^{i-1,j-1}_{h,k} + u_i sigma^{i-1,j-1}_{h-1,k}
///                     + v_j sigma^{i-1,j-1}_{h,k-1} + u_i v_j sigma^{i-1,j-1}_{h-1,k-1}
///
/// in the interior, one-variable Pascal-style branches on the h = 0 and
/// k = 0 boundary planes, sigma^{i,j}_{0,0} = 1, and out-of-range reads 0.
/// sigma^{p,q}_{h,k} equals C(p,h) C(q,k) times the polar value.
class SigmaTableRect {
public:
  SigmaTableRect(std::vector<Ratio> u_args, std::vector<Ratio> v_args);

  int degree_u() const { return static_cast<int>(u_args_.size()); }  // p
  int degree_v() const { return static_cast<int>(v_args_.size()); }  // q
  const std::vector<Ratio>& u_args() const { return u_args_; }
  const std::vector<Ratio>& v_args() const { return v_args_; }

  /// sigma^{i,j}_{h,k}; zero when h or k is negative or exceeds i or j.
  const Ratio& sigma(int i, int j, int h, int k) const;

  /// Cells stored over all (i,j,h,k): T(p+1) * T(q+1) with T(n) = n(n+1)/2.
  std::size_t cell_count() const;
  /// Recurrence applications (cells other than the (0,0) bases).
  std::size_t update_count() const { return updates_; }

private:
  std::vector<Ratio> u_args_;
  std::vector<Ratio> v_args_;
  // grids_[i][j] holds (i+1) x (j+1) values, h major.
  std::vector<std::vector<std::vector<Ratio>>> grids_;
  std::size_t updates_ = 0;
};

/// Polar value of p2 w.r.t. bidegree (p, q) = (#u_args, #v_args):
/// sum_{h,k} a_{h,k} sigma^{p,q}_{h,k} / (C(p,h) C(q,k)).
/// Throws std::invalid_argument when a monomial degree exceeds (p, q).
Ratio polar_value_rect(const Poly2& p2, const SigmaTableRect& table);
Ratio polar_value_rect(const Poly2& p2, std::vector<Ratio> u_args, std::vector<Ratio> v_args);

/// f^{p,q}_{h,k} for all h, k via the three direct recurrences
/// (divisions at every level); grid indexed [h][k].
std::vector<std::vector<Ratio>> direct_polar_grid_rect(const std::vector<Ratio>& u_args,
                                                       const std::vector<Ratio>& v_args);
Ratio polar_value_rect_direct(const Poly2& p2, const std::vector<Ratio>& u_args,
                              const std::vector<Ratio>& v_args);

/// Closed form of f^{p,q}_{h,k} over the (0,1)x(0,1) frames when zeros_u
/// of the u-arguments are 0, zeros_v of the v-arguments are 0 and the
/// rest are 1: C(p-zeros_u, h) C(q-zeros_v, k) / (C(p,h) C(q,k)).
Ratio closed_form_rect(int p, int q, int zeros_u, int zeros_v, int h, int k);

/// Argument tuples of control point b_{i,j}: (r1 x (p-i), s1 x i) and
/// (r2 x (q-j), s2 x j).
std::vector<Ratio> control_args_rect_u(const FramePair& frames, int p, int i);
std::vector<Ratio> control_args_rect_v(const FramePair& frames, int q, int j);

/// Rectangular control net of the map w.r.t. bidegree (p, q); row-major,
/// i outer ascending. Rational maps produce weighted points.
RectNet rect_control_net(const SurfaceMap& map, int p, int q, const FramePair& frames,
                         const LiftOptions& options = {});

}  // namespace polarize
