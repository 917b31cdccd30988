#pragma once

#include "polarize/ratio.hpp"

#include <stdexcept>

namespace polarize {

/// Affine frame (r, s) of the line; r != s.
struct AffineFrame1 {
  Ratio r = 0;
  Ratio s = 1;

  AffineFrame1() = default;
  AffineFrame1(Ratio r_, Ratio s_) : r(std::move(r_)), s(std::move(s_)) {
    if (r == s) throw std::invalid_argument("AffineFrame1: degenerate frame (r == s)");
  }
};

/// Argument point (u, v) of a total-degree polar form.
struct Point2 {
  Ratio u = 0;
  Ratio v = 0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Independent frames for the u and v parameter lines of a rectangular patch.
struct FramePair {
  AffineFrame1 u;
  AffineFrame1 v;
};

/// Affine frame of the plane: three affinely independent points r, s, t.
struct AffineFrame2 {
  Point2 r{1, 0};
  Point2 s{0, 1};
  Point2 t{0, 0};

  AffineFrame2() = default;
  AffineFrame2(Point2 r_, Point2 s_, Point2 t_)
      : r(std::move(r_)), s(std::move(s_)), t(std::move(t_)) {
    const Ratio det = (s.u - r.u) * (t.v - r.v) - (s.v - r.v) * (t.u - r.u);
    if (det.is_zero()) {
      throw std::invalid_argument("AffineFrame2: degenerate frame (collinear points)");
    }
  }
};

}  // namespace polarize
