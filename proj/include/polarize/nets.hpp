#pragma once

#include "polarize/frames.hpp"
#include "polarize/ratio.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace polarize {

/// A control point of a rational net: affine coordinates (already divided
/// by the weight) plus the weight itself. When the owning net is marked
/// homogeneous, coords hold the raw numerator polar values instead.
struct WeightedPoint {
  std::vector<Ratio> coords;
  Ratio weight = 1;

  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

/// Raised when a weight that must be nonzero vanishes; the message names
/// the offending net index or parameter.
class ZeroWeightError : public std::runtime_error {
public:
  explicit ZeroWeightError(const std::string& where)
      : std::runtime_error("zero weight at " + where), where_(where) {}

  const std::string& where() const { return where_; }

private:
  std::string where_;
};

/// Control polygon b_0..b_m of a curve over frame (r, s).
struct CurveNet {
  int degree = 0;
  AffineFrame1 frame;
  bool homogeneous = false;
  std::vector<WeightedPoint> points;

  const WeightedPoint& at(int j) const { return points.at(static_cast<std::size_t>(j)); }
};

/// Rectangular control net b_{i,j}, i = 0..p outer, j = 0..q inner.
struct RectNet {
  int degree_u = 0;  // p
  int degree_v = 0;  // q
  FramePair frames;
  bool homogeneous = false;
  std::vector<WeightedPoint> points;

  const WeightedPoint& at(int i, int j) const {
    return points.at(static_cast<std::size_t>(i) * (degree_v + 1) + j);
  }
};

/// Triangular control net b_{i,j,k}, (i,j,k) in Delta_m; linearized with
/// i ascending outer, j ascending inner, k = m - i - j.
struct TriNet {
  int degree = 0;  // m
  AffineFrame2 frame;
  bool homogeneous = false;
  std::vector<WeightedPoint> points;

  static std::size_t index_of(int m, int i, int j) {
    return static_cast<std::size_t>(i) * (m + 1) - static_cast<std::size_t>(i) * (i - 1) / 2 + j;
  }

  const WeightedPoint& at(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i + j + k != degree) {
      throw std::out_of_range("TriNet: index outside Delta_m");
    }
    return points.at(index_of(degree, i, j));
  }
};

/// Number of affine coordinates carried by each point.
template <class Net>
int dimension(const Net& net) {
  return net.points.empty() ? 0 : static_cast<int>(net.points.front().coords.size());
}

}  // namespace polarize
