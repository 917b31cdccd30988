#pragma once

#include "polarize/frames.hpp"
#include "polarize/lift.hpp"
#include "polarize/nets.hpp"
#include "polarize/poly.hpp"
#include "polarize/ratio.hpp"

#include <cstddef>
#include <vector>

namespace polarize {

/// Tetrahedron of scaled total-degree polar values
/// sigma^i_{h,k}((u_1,v_1)..(u_i,v_i)) of the monomials u^h v^k, with
/// layer i holding all h, k >= 0, h + k <= i. Cells come from
///
///   sigma^i_{h,k} = sigma^{i-1}_{h,k} + u_i sigma^{i-1}_{h-1,k}
///                 + v_i sigma^{i-1}_{h,k-1}
///
/// with sigma^i_{0,0} = 1 and out-of-range reads 0. sigma^m_{h,k} equals
/// C(m,h) C(m-h,k) times the polar value.
class SigmaTableTri {
public:
  explicit SigmaTableTri(std::vector<Point2> args);

  int degree() const { return static_cast<int>(args_.size()); }  // m
  const std::vector<Point2>& args() const { return args_; }

  /// sigma^i_{h,k}; zero when h < 0, k < 0 or h + k > i.
  const Ratio& sigma(int i, int h, int k) const;

  /// Cells stored: sum_{i<=m} (i+1)(i+2)/2.
  std::size_t cell_count() const;
  /// Recurrence applications (two multiplies and two adds each).
  std::size_t update_count() const { return updates_; }

private:
  std::vector<Point2> args_;
  std::vector<std::vector<Ratio>> layers_;  // layer i, h major: (h,k) at h(i+1)-h(h-1)/2+k
  std::size_t updates_ = 0;
};

/// Polar value of p2 w.r.t. total degree m = table.degree():
/// sum_{h,l} a_{h,l} sigma^m_{h,l} / (C(m,h) C(m-h,l)).
/// Throws std::invalid_argument when total_degree(p2) > m.
Ratio polar_value_tri(const Poly2& p2, const SigmaTableTri& table);
Ratio polar_value_tri(const Poly2& p2, std::vector<Point2> args);

/// f^m_{h,k} for all h + k <= m via the direct recurrence
/// f^m_{h,k} = ((m-h-k)/m) f^{m-1}_{h,k} + (h/m) u_m f^{m-1}_{h-1,k}
///           + (k/m) v_m f^{m-1}_{h,k-1}; grid indexed [h][k].
std::vector<std::vector<Ratio>> direct_polar_layer_tri(const std::vector<Point2>& args);
Ratio polar_value_tri_direct(const Poly2& p2, const std::vector<Point2>& args);

/// Closed form of f^m_{h,k} over the standard frame when the argument
/// multiset is count_r copies of (1,0), count_s copies of (0,1) and
/// count_t copies of (0,0): C(count_r,h) C(count_s,k) / (C(m,h) C(m-h,k)).
Ratio closed_form_tri(int m, int count_r, int count_s, int count_t, int h, int k);

/// Argument tuple of control point b_{i,j,k}: i copies of r, j of s, k of t.
std::vector<Point2> control_args_tri(const AffineFrame2& frame, int i, int j, int k);

/// Triangular control net of the map w.r.t. total degree m; points in
/// i-outer / j-inner order with k = m - i - j.
TriNet tri_control_net(const SurfaceMap& map, int m, const AffineFrame2& frame,
                       const LiftOptions& options = {});

}  // namespace polarize
