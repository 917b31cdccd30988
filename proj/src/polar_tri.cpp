#include "polarize/polar_tri.hpp"

#include "polarize/combinatorics.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace polarize {

namespace {

const Ratio kZero = 0;
const Ratio kOne = 1;

std::size_t layer_index(int i, int h, int k) {
  // h-major triangle layout: rows h = 0..i, row h holds k = 0..i-h.
  return static_cast<std::size_t>(h) * (i + 1) - static_cast<std::size_t>(h) * (h - 1) / 2 + k;
}

}  // namespace

SigmaTableTri::SigmaTableTri(std::vector<Point2> args) : args_(std::move(args)) {
  const int m = degree();
  layers_.resize(m + 1);
  layers_[0] = {kOne};
  auto read = [this](int i, int h, int k) -> const Ratio& {
    if (h < 0 || k < 0 || h + k > i) return kZero;
    return layers_[i][layer_index(i, h, k)];
  };
  for (int i = 1; i <= m; ++i) {
    const Ratio& u_i = args_[i - 1].u;
    const Ratio& v_i = args_[i - 1].v;
    layers_[i].resize(static_cast<std::size_t>(i + 1) * (i + 2) / 2);
    layers_[i][layer_index(i, 0, 0)] = kOne;
    for (int h = 0; h <= i; ++h) {
      for (int k = h == 0 ? 1 : 0; k <= i - h; ++k) {
        layers_[i][layer_index(i, h, k)] =
            read(i - 1, h, k) + u_i * read(i - 1, h - 1, k) + v_i * read(i - 1, h, k - 1);
        ++updates_;
      }
    }
  }
}

const Ratio& SigmaTableTri::sigma(int i, int h, int k) const {
  if (i < 0 || i > degree()) throw std::out_of_range("SigmaTableTri: layer out of range");
  if (h < 0 || k < 0 || h + k > i) return kZero;
  return layers_[i][layer_index(i, h, k)];
}

std::size_t SigmaTableTri::cell_count() const {
  std::size_t total = 0;
  for (const auto& layer : layers_) total += layer.size();
  return total;
}

Ratio polar_value_tri(const Poly2& p2, const SigmaTableTri& table) {
  const int m = table.degree();
  if (p2.total_degree() > m) {
    throw std::invalid_argument("polar_value_tri: total degree " +
                                std::to_string(p2.total_degree()) +
                                " exceeds polarization degree " + std::to_string(m));
  }
  Ratio acc = 0;
  for (const auto& [exp, a] : p2.terms()) {
    acc += a * table.sigma(m, exp.u, exp.v) / Ratio(multinomial3(m, exp.u, exp.v));
  }
  return acc;
}

Ratio polar_value_tri(const Poly2& p2, std::vector<Point2> args) {
  return polar_value_tri(p2, SigmaTableTri(std::move(args)));
}

std::vector<std::vector<Ratio>> direct_polar_layer_tri(const std::vector<Point2>& args) {
  const int m = static_cast<int>(args.size());
  std::vector<std::vector<Ratio>> layer = {{kOne}};  // f^0
  auto read = [](const std::vector<std::vector<Ratio>>& f, int i, int h, int k) -> const Ratio& {
    if (h < 0 || k < 0 || h + k > i) return kZero;
    return f[h][k];
  };
  for (int i = 1; i <= m; ++i) {
    const Ratio& u_i = args[i - 1].u;
    const Ratio& v_i = args[i - 1].v;
    std::vector<std::vector<Ratio>> next(i + 1);
    const Ratio denom(i);
    for (int h = 0; h <= i; ++h) {
      next[h].resize(i - h + 1);
      for (int k = 0; k <= i - h; ++k) {
        if (h == 0 && k == 0) {
          next[0][0] = kOne;
          continue;
        }
        Ratio value = Ratio(i - h - k) / denom * read(layer, i - 1, h, k);
        value += Ratio(h) / denom * u_i * read(layer, i - 1, h - 1, k);
        value += Ratio(k) / denom * v_i * read(layer, i - 1, h, k - 1);
        next[h][k] = std::move(value);
      }
    }
    layer = std::move(next);
  }
  return layer;
}

Ratio polar_value_tri_direct(const Poly2& p2, const std::vector<Point2>& args) {
  const int m = static_cast<int>(args.size());
  if (p2.total_degree() > m) {
    throw std::invalid_argument("polar_value_tri_direct: total degree exceeds " +
                                std::to_string(m));
  }
  const auto f = direct_polar_layer_tri(args);
  Ratio acc = 0;
  for (const auto& [exp, a] : p2.terms()) acc += a * f[exp.u][exp.v];
  return acc;
}

Ratio closed_form_tri(int m, int count_r, int count_s, int count_t, int h, int k) {
  if (count_r < 0 || count_s < 0 || count_t < 0 || count_r + count_s + count_t != m) {
    throw std::invalid_argument("closed_form_tri: multiplicities must be nonnegative and sum to m");
  }
  if (h < 0 || k < 0 || h + k > m) throw std::invalid_argument("closed_form_tri: (h, k) out of range");
  return Ratio(binomial(count_r, h) * binomial(count_s, k),
               binomial(m, h) * binomial(m - h, k));
}

std::vector<Point2> control_args_tri(const AffineFrame2& frame, int i, int j, int k) {
  std::vector<Point2> args;
  args.reserve(i + j + k);
  for (int c = 0; c < i; ++c) args.push_back(frame.r);
  for (int c = 0; c < j; ++c) args.push_back(frame.s);
  for (int c = 0; c < k; ++c) args.push_back(frame.t);
  return args;
}

TriNet tri_control_net(const SurfaceMap& map, int m, const AffineFrame2& frame,
                       const LiftOptions& options) {
  if (m < total_degree(map)) {
    throw std::invalid_argument("tri_control_net: requested degree " + std::to_string(m) +
                                " is below the map total degree " +
                                std::to_string(total_degree(map)));
  }
  TriNet net;
  net.degree = m;
  net.frame = frame;
  net.homogeneous = options.homogeneous;
  net.points.reserve(static_cast<std::size_t>(m + 1) * (m + 2) / 2);
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j + i <= m; ++j) {
      const int k = m - i - j;
      const SigmaTableTri table(control_args_tri(frame, i, j, k));
      std::vector<Ratio> values;
      values.reserve(map.numerators().size());
      for (const Poly2& num : map.numerators()) values.push_back(polar_value_tri(num, table));
      Ratio weight = polar_value_tri(map.denominator(), table);
      net.points.push_back(lift_point(std::move(values), std::move(weight), options,
                                      "control point b_{" + std::to_string(i) + "," +
                                          std::to_string(j) + "," + std::to_string(k) + "}"));
    }
  }
  return net;
}

}  // namespace polarize
