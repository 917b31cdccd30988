#pragma once

#include "polarize/frames.hpp"
#include "polarize/lift.hpp"
#include "polarize/nets.hpp"
#include "polarize/poly.hpp"
#include "polarize/ratio.hpp"

#include <cstddef>
#include <vector>

namespace polarize {

/// Triangle of scaled polar values sigma^i_k(t_1..t_i) of the monomials
/// t^k, built row by row from
///
///   sigma^i_k = sigma^{i-1}_k + t_i * sigma^{i-1}_{k-1}
///
/// with sigma^i_0 = 1 and out-of-range cells reading 0. sigma^m_k equals
/// C(m,k) times the polar value of t^k at the argument tuple.
class SigmaTableCurve {
public:
  explicit SigmaTableCurve(std::vector<Ratio> args);

  int degree() const { return static_cast<int>(args_.size()); }
  const std::vector<Ratio>& args() const { return args_; }

  /// sigma^i_k; zero for k < 0 or k > i. Requires 0 <= i <= degree().
  const Ratio& sigma(int i, int k) const;

  /// Cells stored: (m+1)(m+2)/2.
  std::size_t cell_count() const;
  /// Recurrence applications (one add + one multiply each): m(m+1)/2.
  std::size_t update_count() const { return updates_; }

private:
  std::vector<Ratio> args_;
  std::vector<std::vector<Ratio>> rows_;
  std::size_t updates_ = 0;
};

/// Polar value of p w.r.t. degree m = table.degree() at the table's
/// argument tuple: sum_k a_k sigma^m_k / C(m,k).
/// Throws std::invalid_argument when degree(p) > m.
Ratio polar_value_curve(const Poly1& p, const SigmaTableCurve& table);
Ratio polar_value_curve(const Poly1& p, std::vector<Ratio> args);

/// Polar values f^m_k of all monomials t^k computed by the direct
/// recurrence f^m_k = ((m-k)/m) f^{m-1}_k + (k/m) t_m f^{m-1}_{k-1}
/// (divides at every level; kept as the cross-check path).
std::vector<Ratio> direct_polar_row_curve(const std::vector<Ratio>& args);
Ratio polar_value_curve_direct(const Poly1& p, const std::vector<Ratio>& args);

/// Closed form of f^m_k when count_r arguments equal r and count_s equal s
/// (m = count_r + count_s):
///   sum_j C(count_r, k-j) C(count_s, j) r^{k-j} s^j / C(m, k).
Ratio closed_form_polar_curve(int count_r, int count_s, const Ratio& r, const Ratio& s, int k);

/// Argument tuple of control point b_j: m-j copies of r then j copies of s.
std::vector<Ratio> control_args_curve(const AffineFrame1& frame, int m, int j);

/// Control points b_0..b_m of the map w.r.t. degree m over the frame.
/// Rational maps produce weighted points (denominator polar value as the
/// weight); polynomial maps produce unit weights. Throws
/// std::invalid_argument when a component degree exceeds m.
CurveNet curve_control_points(const CurveMap& map, int m, const AffineFrame1& frame,
                              const LiftOptions& options = {});

}  // namespace polarize
