#pragma once

#include "polarize/frames.hpp"
#include "polarize/nets.hpp"
#include "polarize/ratio.hpp"

#include <cstdint>
#include <vector>

namespace polarize {

// Hard ceilings for the exponential defining-sum oracles; exceeding them
// throws std::length_error.
inline constexpr int kNaiveCurveLimit = 12;  // m
inline constexpr int kNaiveRectLimit = 12;   // p + q
inline constexpr int kNaiveTriLimit = 9;     // m

/// Defining-sum polar value together with the number of product terms
/// the enumeration visited.
struct NaiveValue {
  Ratio value;
  std::uint64_t terms = 0;
};

/// Polar value f^m_k of t^k at (t_1..t_m) by explicit enumeration of the
/// C(m,k) index subsets: (sum over |I| = k of prod_{i in I} t_i) / C(m,k).
NaiveValue naive_polar_curve_counted(int k, const std::vector<Ratio>& args);
Ratio naive_polar_curve(int k, const std::vector<Ratio>& args);

/// f^{p,q}_{h,k} of u^h v^k by the double-subset defining sum.
NaiveValue naive_polar_rect_counted(int h, int k, const std::vector<Ratio>& u_args,
                                    const std::vector<Ratio>& v_args);
Ratio naive_polar_rect(int h, int k, const std::vector<Ratio>& u_args,
                       const std::vector<Ratio>& v_args);

/// f^m_{h,k} of u^h v^k by enumerating disjoint index subsets I, J
/// (|I| = h, |J| = k) of {1..m}.
NaiveValue naive_polar_tri_counted(int h, int k, const std::vector<Point2>& args);
Ratio naive_polar_tri(int h, int k, const std::vector<Point2>& args);

/// Evaluates the curve at parameter t by repeated affine interpolation
/// with the local coordinate (t - r)/(s - r). Rational nets are carried
/// homogeneously and divided at the end; a vanishing final weight throws
/// ZeroWeightError.
std::vector<Ratio> decasteljau_curve(const CurveNet& net, const Ratio& t);

/// Rectangular patch value at (u, v): nested curve evaluation, v first.
std::vector<Ratio> decasteljau_rect(const RectNet& net, const Ratio& u, const Ratio& v);

/// Triangular patch value at (u, v): repeated barycentric interpolation
/// w.r.t. the net's frame.
std::vector<Ratio> decasteljau_tri(const TriNet& net, const Point2& uv);

/// Barycentric coordinates of (u, v) w.r.t. the frame (weights for r, s, t).
std::vector<Ratio> barycentric(const AffineFrame2& frame, const Point2& uv);

/// B^m_k(t) = C(m,k) (1-t)^{m-k} t^k.
Ratio bernstein_value(int m, int k, const Ratio& t);

/// sum_k B^m_k(t) b_k for a net over the frame (0, 1); other frames throw
/// std::invalid_argument (they are served by decasteljau_curve).
std::vector<Ratio> bernstein_eval(const CurveNet& net, const Ratio& t);

}  // namespace polarize
