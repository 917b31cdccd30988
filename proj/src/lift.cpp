#include "polarize/lift.hpp"

#include <algorithm>
#include <stdexcept>

namespace polarize {

WeightedPoint lift_point(std::vector<Ratio> numerator_values, Ratio weight,
                         const LiftOptions& options, const std::string& where) {
  if (options.homogeneous) {
    return {std::move(numerator_values), std::move(weight)};
  }
  if (weight.is_zero()) throw ZeroWeightError(where);
  for (Ratio& c : numerator_values) c /= weight;
  return {std::move(numerator_values), std::move(weight)};
}

std::vector<int> keep_after_drop(int dimension, const std::vector<int>& drop) {
  for (int idx : drop) {
    if (idx < 0 || idx >= dimension) {
      throw std::invalid_argument("drop coordinate index " + std::to_string(idx) +
                                  " out of range for dimension " + std::to_string(dimension));
    }
  }
  std::vector<int> keep;
  for (int i = 0; i < dimension; ++i) {
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
  }
  return keep;
}

}  // namespace polarize
