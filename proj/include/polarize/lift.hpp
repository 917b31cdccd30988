#pragma once

#include "polarize/nets.hpp"
#include "polarize/ratio.hpp"

#include <string>
#include <vector>

namespace polarize {

/// How rational maps are turned into weighted control points.
struct LiftOptions {
  /// Keep the raw (numerator values, weight) form instead of dividing by
  /// the weight; also the only way to represent zero-weight points.
  bool homogeneous = false;
};

/// Combines per-coordinate numerator polar values with the denominator
/// polar value w into one control point: ((c_1/w, ..., c_d/w), w), or the
/// homogeneous ((c_1, ..., c_d), w) when requested. Throws ZeroWeightError
/// naming `where` if w == 0 in affine mode.
WeightedPoint lift_point(std::vector<Ratio> numerator_values, Ratio weight,
                         const LiftOptions& options, const std::string& where);

/// Parallel projection of the projective object: keeps the named affine
/// coordinates (0-based, in the given order) and every weight.
template <class Net>
Net project_coordinates(const Net& net, const std::vector<int>& keep) {
  const int d = dimension(net);
  for (int idx : keep) {
    if (idx < 0 || idx >= d) {
      throw std::invalid_argument("project_coordinates: coordinate index " +
                                  std::to_string(idx) + " out of range");
    }
  }
  Net out = net;
  for (WeightedPoint& pt : out.points) {
    std::vector<Ratio> kept;
    kept.reserve(keep.size());
    for (int idx : keep) kept.push_back(pt.coords[static_cast<std::size_t>(idx)]);
    pt.coords = std::move(kept);
  }
  return out;
}

/// keep-list complement helper for "drop these coordinates" interfaces.
std::vector<int> keep_after_drop(int dimension, const std::vector<int>& drop);

}  // namespace polarize
