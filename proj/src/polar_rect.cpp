#include "polarize/polar_rect.hpp"

#include "polarize/combinatorics.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace polarize {

namespace {
const Ratio kZero = 0;
const Ratio kOne = 1;
}  // namespace

SigmaTableRect::SigmaTableRect(std::vector<Ratio> u_args, std::vector<Ratio> v_args)
    : u_args_(std::move(u_args)), v_args_(std::move(v_args)) {
  const int p = degree_u();
  const int q = degree_v();
  grids_.resize(p + 1);
  auto cell = [this](int i, int j, int h, int k) -> Ratio& {
    return grids_[i][j][static_cast<std::size_t>(h) * (j + 1) + k];
  };
  auto read = [&](int i, int j, int h, int k) -> const Ratio& {
    if (h < 0 || k < 0 || h > i || k > j) return kZero;
    return cell(i, j, h, k);
  };
  for (int i = 0; i <= p; ++i) {
    grids_[i].resize(q + 1);
    for (int j = 0; j <= q; ++j) {
      grids_[i][j].resize(static_cast<std::size_t>(i + 1) * (j + 1));
      cell(i, j, 0, 0) = kOne;
      const Ratio& u_i = i >= 1 ? u_args_[i - 1] : kZero;
      const Ratio& v_j = j >= 1 ? v_args_[j - 1] : kZero;
      // k = 0 boundary: curve-style recurrence in u (from layer (i-1, j)).
      for (int h = 1; h <= i; ++h) {
        cell(i, j, h, 0) = read(i - 1, j, h, 0) + u_i * read(i - 1, j, h - 1, 0);
        ++updates_;
      }
      // h = 0 boundary: curve-style recurrence in v (from layer (i, j-1)).
      for (int k = 1; k <= j; ++k) {
        cell(i, j, 0, k) = read(i, j - 1, 0, k) + v_j * read(i, j - 1, 0, k - 1);
        ++updates_;
      }
      // interior: four-term recurrence from layer (i-1, j-1).
      for (int h = 1; h <= i; ++h) {
        for (int k = 1; k <= j; ++k) {
          cell(i, j, h, k) = read(i - 1, j - 1, h, k) + u_i * read(i - 1, j - 1, h - 1, k) +
                             v_j * read(i - 1, j - 1, h, k - 1) +
                             u_i * v_j * read(i - 1, j - 1, h - 1, k - 1);
          ++updates_;
        }
      }
    }
  }
}

const Ratio& SigmaTableRect::sigma(int i, int j, int h, int k) const {
  if (i < 0 || i > degree_u() || j < 0 || j > degree_v()) {
    throw std::out_of_range("SigmaTableRect: layer out of range");
  }
  if (h < 0 || k < 0 || h > i || k > j) return kZero;
  return grids_[i][j][static_cast<std::size_t>(h) * (j + 1) + k];
}

std::size_t SigmaTableRect::cell_count() const {
  std::size_t total = 0;
  for (const auto& row : grids_) {
    for (const auto& grid : row) total += grid.size();
  }
  return total;
}

Ratio polar_value_rect(const Poly2& p2, const SigmaTableRect& table) {
  const int p = table.degree_u();
  const int q = table.degree_v();
  if (p2.maxdeg_u() > p || p2.maxdeg_v() > q) {
    throw std::invalid_argument("polar_value_rect: monomial degrees exceed bidegree (" +
                                std::to_string(p) + ", " + std::to_string(q) + ")");
  }
  Ratio acc = 0;
  for (const auto& [exp, a] : p2.terms()) {
    acc += a * table.sigma(p, q, exp.u, exp.v) / Ratio(binomial(p, exp.u) * binomial(q, exp.v));
  }
  return acc;
}

Ratio polar_value_rect(const Poly2& p2, std::vector<Ratio> u_args, std::vector<Ratio> v_args) {
  return polar_value_rect(p2, SigmaTableRect(std::move(u_args), std::move(v_args)));
}

std::vector<std::vector<Ratio>> direct_polar_grid_rect(const std::vector<Ratio>& u_args,
                                                       const std::vector<Ratio>& v_args) {
  const int p = static_cast<int>(u_args.size());
  const int q = static_cast<int>(v_args.size());
  // f[i][j] is the (i+1) x (j+1) grid of f^{i,j}_{h,k}; same traversal as
  // the sigma table, with the weighted branches of the direct recurrence.
  std::vector<std::vector<std::vector<std::vector<Ratio>>>> f(p + 1);
  auto read = [&](int i, int j, int h, int k) -> const Ratio& {
    if (h < 0 || k < 0 || h > i || k > j) return kZero;
    return f[i][j][h][k];
  };
  for (int i = 0; i <= p; ++i) {
    f[i].resize(q + 1);
    for (int j = 0; j <= q; ++j) {
      f[i][j].assign(i + 1, std::vector<Ratio>(j + 1));
      f[i][j][0][0] = kOne;
      const Ratio& u_i = i >= 1 ? u_args[i - 1] : kZero;
      const Ratio& v_j = j >= 1 ? v_args[j - 1] : kZero;
      for (int h = 1; h <= i; ++h) {
        f[i][j][h][0] =
            Ratio(i - h) / Ratio(i) * read(i - 1, j, h, 0) +
            Ratio(h) / Ratio(i) * u_i * read(i - 1, j, h - 1, 0);
      }
      for (int k = 1; k <= j; ++k) {
        f[i][j][0][k] =
            Ratio(j - k) / Ratio(j) * read(i, j - 1, 0, k) +
            Ratio(k) / Ratio(j) * v_j * read(i, j - 1, 0, k - 1);
      }
      const Ratio ij(static_cast<long long>(i) * j);
      for (int h = 1; h <= i; ++h) {
        for (int k = 1; k <= j; ++k) {
          f[i][j][h][k] = Ratio(static_cast<long long>(i - h) * (j - k)) / ij *
                              read(i - 1, j - 1, h, k) +
                          Ratio(static_cast<long long>(h) * (j - k)) / ij * u_i *
                              read(i - 1, j - 1, h - 1, k) +
                          Ratio(static_cast<long long>(i - h) * k) / ij * v_j *
                              read(i - 1, j - 1, h, k - 1) +
                          Ratio(static_cast<long long>(h) * k) / ij * u_i * v_j *
                              read(i - 1, j - 1, h - 1, k - 1);
        }
      }
    }
  }
  return f[p][q];
}

Ratio polar_value_rect_direct(const Poly2& p2, const std::vector<Ratio>& u_args,
                              const std::vector<Ratio>& v_args) {
  const int p = static_cast<int>(u_args.size());
  const int q = static_cast<int>(v_args.size());
  if (p2.maxdeg_u() > p || p2.maxdeg_v() > q) {
    throw std::invalid_argument("polar_value_rect_direct: monomial degrees exceed bidegree");
  }
  const auto f = direct_polar_grid_rect(u_args, v_args);
  Ratio acc = 0;
  for (const auto& [exp, a] : p2.terms()) acc += a * f[exp.u][exp.v];
  return acc;
}

Ratio closed_form_rect(int p, int q, int zeros_u, int zeros_v, int h, int k) {
  if (zeros_u < 0 || zeros_u > p || zeros_v < 0 || zeros_v > q) {
    throw std::invalid_argument("closed_form_rect: zero-counts out of range");
  }
  if (h < 0 || h > p || k < 0 || k > q) {
    throw std::invalid_argument("closed_form_rect: (h, k) out of range");
  }
  return Ratio(binomial(p - zeros_u, h) * binomial(q - zeros_v, k),
               binomial(p, h) * binomial(q, k));
}

std::vector<Ratio> control_args_rect_u(const FramePair& frames, int p, int i) {
  std::vector<Ratio> args;
  args.reserve(p);
  for (int c = 0; c < p - i; ++c) args.push_back(frames.u.r);
  for (int c = 0; c < i; ++c) args.push_back(frames.u.s);
  return args;
}

std::vector<Ratio> control_args_rect_v(const FramePair& frames, int q, int j) {
  std::vector<Ratio> args;
  args.reserve(q);
  for (int c = 0; c < q - j; ++c) args.push_back(frames.v.r);
  for (int c = 0; c < j; ++c) args.push_back(frames.v.s);
  return args;
}

RectNet rect_control_net(const SurfaceMap& map, int p, int q, const FramePair& frames,
                         const LiftOptions& options) {
  const auto [need_p, need_q] = bidegree(map);
  if (p < need_p || q < need_q) {
    throw std::invalid_argument("rect_control_net: requested bidegree (" + std::to_string(p) +
                                ", " + std::to_string(q) + ") is below the map bidegree (" +
                                std::to_string(need_p) + ", " + std::to_string(need_q) + ")");
  }
  RectNet net;
  net.degree_u = p;
  net.degree_v = q;
  net.frames = frames;
  net.homogeneous = options.homogeneous;
  net.points.reserve(static_cast<std::size_t>(p + 1) * (q + 1));
  for (int i = 0; i <= p; ++i) {
    for (int j = 0; j <= q; ++j) {
      const SigmaTableRect table(control_args_rect_u(frames, p, i),
                                 control_args_rect_v(frames, q, j));
      std::vector<Ratio> values;
      values.reserve(map.numerators().size());
      for (const Poly2& num : map.numerators()) values.push_back(polar_value_rect(num, table));
      Ratio weight = polar_value_rect(map.denominator(), table);
      net.points.push_back(lift_point(std::move(values), std::move(weight), options,
                                      "control point b_{" + std::to_string(i) + "," +
                                          std::to_string(j) + "}"));
    }
  }
  return net;
}

}  // namespace polarize
