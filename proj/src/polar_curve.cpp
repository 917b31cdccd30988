#include "polarize/polar_curve.hpp"

#include "polarize/combinatorics.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace polarize {

namespace {
const Ratio kZero = 0;
const Ratio kOne = 1;
}  // namespace

SigmaTableCurve::SigmaTableCurve(std::vector<Ratio> args) : args_(std::move(args)) {
  const int m = degree();
  rows_.resize(m + 1);
  rows_[0] = {kOne};
  for (int i = 1; i <= m; ++i) {
    const Ratio& t_i = args_[i - 1];
    rows_[i].resize(i + 1);
    rows_[i][0] = kOne;
    for (int k = 1; k <= i; ++k) {
      const Ratio& same = k <= i - 1 ? rows_[i - 1][k] : kZero;
      rows_[i][k] = same + t_i * rows_[i - 1][k - 1];
      ++updates_;
    }
  }
}

const Ratio& SigmaTableCurve::sigma(int i, int k) const {
  if (i < 0 || i > degree()) throw std::out_of_range("SigmaTableCurve: row out of range");
  if (k < 0 || k > i) return kZero;
  return rows_[i][k];
}

std::size_t SigmaTableCurve::cell_count() const {
  const std::size_t n = rows_.size();
  return n * (n + 1) / 2;
}

Ratio polar_value_curve(const Poly1& p, const SigmaTableCurve& table) {
  const int m = table.degree();
  if (p.degree() > m) {
    throw std::invalid_argument("polar_value_curve: polynomial degree " +
                                std::to_string(p.degree()) + " exceeds polarization degree " +
                                std::to_string(m));
  }
  Ratio acc = 0;
  for (const auto& [k, a] : p.terms()) {
    acc += a * table.sigma(m, k) / Ratio(binomial(m, k));
  }
  return acc;
}

Ratio polar_value_curve(const Poly1& p, std::vector<Ratio> args) {
  return polar_value_curve(p, SigmaTableCurve(std::move(args)));
}

std::vector<Ratio> direct_polar_row_curve(const std::vector<Ratio>& args) {
  const int m = static_cast<int>(args.size());
  std::vector<Ratio> row = {kOne};  // f^0_0
  for (int i = 1; i <= m; ++i) {
    const Ratio& t_i = args[i - 1];
    std::vector<Ratio> next(i + 1);
    next[0] = kOne;
    const Ratio denom(i);
    for (int k = 1; k <= i; ++k) {
      Ratio value = k <= i - 1 ? Ratio(i - k) / denom * row[k] : kZero;
      value += Ratio(k) / denom * t_i * row[k - 1];
      next[k] = value;
    }
    row = std::move(next);
  }
  return row;
}

Ratio polar_value_curve_direct(const Poly1& p, const std::vector<Ratio>& args) {
  const int m = static_cast<int>(args.size());
  if (p.degree() > m) {
    throw std::invalid_argument("polar_value_curve_direct: polynomial degree exceeds " +
                                std::to_string(m));
  }
  const std::vector<Ratio> f = direct_polar_row_curve(args);
  Ratio acc = 0;
  for (const auto& [k, a] : p.terms()) acc += a * f[k];
  return acc;
}

Ratio closed_form_polar_curve(int count_r, int count_s, const Ratio& r, const Ratio& s, int k) {
  if (count_r < 0 || count_s < 0) {
    throw std::invalid_argument("closed_form_polar_curve: negative multiplicity");
  }
  const int m = count_r + count_s;
  if (k < 0 || k > m) throw std::invalid_argument("closed_form_polar_curve: k out of range");
  Ratio acc = 0;
  for (int j = 0; j <= k; ++j) {
    const BigInt ways = binomial(count_r, k - j) * binomial(count_s, j);
    if (ways.is_zero()) continue;
    acc += Ratio(ways) * pow(r, k - j) * pow(s, j);
  }
  return acc / Ratio(binomial(m, k));
}

std::vector<Ratio> control_args_curve(const AffineFrame1& frame, int m, int j) {
  std::vector<Ratio> args;
  args.reserve(m);
  for (int c = 0; c < m - j; ++c) args.push_back(frame.r);
  for (int c = 0; c < j; ++c) args.push_back(frame.s);
  return args;
}

CurveNet curve_control_points(const CurveMap& map, int m, const AffineFrame1& frame,
                              const LiftOptions& options) {
  if (m < curve_degree(map)) {
    throw std::invalid_argument("curve_control_points: requested degree " + std::to_string(m) +
                                " is below the map degree " + std::to_string(curve_degree(map)));
  }
  CurveNet net;
  net.degree = m;
  net.frame = frame;
  net.homogeneous = options.homogeneous;
  net.points.reserve(m + 1);
  for (int j = 0; j <= m; ++j) {
    const SigmaTableCurve table(control_args_curve(frame, m, j));
    std::vector<Ratio> values;
    values.reserve(map.numerators().size());
    for (const Poly1& num : map.numerators()) values.push_back(polar_value_curve(num, table));
    Ratio weight = polar_value_curve(map.denominator(), table);
    net.points.push_back(lift_point(std::move(values), std::move(weight), options,
                                    "control point b_" + std::to_string(j)));
  }
  return net;
}

}  // namespace polarize
