#include "polarize/oracle.hpp"

#include "polarize/combinatorics.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace polarize {

namespace {

// Visits every size-k index combination of {0..n-1} in lexicographic
// order (one empty combination when k == 0).
template <class Visit>
void for_each_combination(int n, int k, const Visit& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

Ratio product_of(const std::vector<Ratio>& values, const std::vector<int>& idx) {
  Ratio prod = 1;
  for (int i : idx) prod *= values[i];
  return prod;
}

// Homogeneous view of a control point: (coords * weight, weight) for
// affine-form nets, (coords, weight) for homogeneous-form nets.
std::vector<Ratio> homogeneous_point(const WeightedPoint& pt, bool net_homogeneous) {
  std::vector<Ratio> h;
  h.reserve(pt.coords.size() + 1);
  for (const Ratio& c : pt.coords) h.push_back(net_homogeneous ? c : c * pt.weight);
  h.push_back(pt.weight);
  return h;
}

std::vector<Ratio> lerp(const std::vector<Ratio>& a, const std::vector<Ratio>& b,
                        const Ratio& lambda) {
  const Ratio one_minus = Ratio(1) - lambda;
  std::vector<Ratio> out(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) out[c] = one_minus * a[c] + lambda * b[c];
  return out;
}

std::vector<Ratio> project_from_homogeneous(std::vector<Ratio> h, const std::string& where) {
  const Ratio w = h.back();
  if (w.is_zero()) throw ZeroWeightError(where);
  h.pop_back();
  for (Ratio& c : h) c /= w;
  return h;
}

std::vector<std::vector<Ratio>> homogeneous_points(const std::vector<WeightedPoint>& pts,
                                                   bool net_homogeneous) {
  std::vector<std::vector<Ratio>> out;
  out.reserve(pts.size());
  for (const WeightedPoint& pt : pts) out.push_back(homogeneous_point(pt, net_homogeneous));
  return out;
}

// Core curve interpolation on homogeneous points; returns the collapsed point.
std::vector<Ratio> decasteljau_collapse(std::vector<std::vector<Ratio>> level,
                                        const Ratio& lambda) {
  if (level.empty()) throw std::invalid_argument("de Casteljau: empty net");
  while (level.size() > 1) {
    std::vector<std::vector<Ratio>> next(level.size() - 1);
    for (std::size_t j = 0; j + 1 < level.size(); ++j) next[j] = lerp(level[j], level[j + 1], lambda);
    level = std::move(next);
  }
  return level[0];
}

}  // namespace

NaiveValue naive_polar_curve_counted(int k, const std::vector<Ratio>& args) {
  const int m = static_cast<int>(args.size());
  if (m > kNaiveCurveLimit) {
    throw std::length_error("naive_polar_curve: m exceeds the oracle limit " +
                            std::to_string(kNaiveCurveLimit));
  }
  if (k < 0 || k > m) throw std::invalid_argument("naive_polar_curve: k out of range");
  NaiveValue out;
  Ratio sum = 0;
  for_each_combination(m, k, [&](const std::vector<int>& idx) {
    sum += product_of(args, idx);
    ++out.terms;
  });
  out.value = sum / Ratio(binomial(m, k));
  return out;
}

Ratio naive_polar_curve(int k, const std::vector<Ratio>& args) {
  return naive_polar_curve_counted(k, args).value;
}

NaiveValue naive_polar_rect_counted(int h, int k, const std::vector<Ratio>& u_args,
                                    const std::vector<Ratio>& v_args) {
  const int p = static_cast<int>(u_args.size());
  const int q = static_cast<int>(v_args.size());
  if (p + q > kNaiveRectLimit) {
    throw std::length_error("naive_polar_rect: p + q exceeds the oracle limit " +
                            std::to_string(kNaiveRectLimit));
  }
  if (h < 0 || h > p || k < 0 || k > q) {
    throw std::invalid_argument("naive_polar_rect: (h, k) out of range");
  }
  NaiveValue out;
  Ratio sum = 0;
  for_each_combination(p, h, [&](const std::vector<int>& u_idx) {
    const Ratio u_prod = product_of(u_args, u_idx);
    for_each_combination(q, k, [&](const std::vector<int>& v_idx) {
      sum += u_prod * product_of(v_args, v_idx);
      ++out.terms;
    });
  });
  out.value = sum / Ratio(binomial(p, h) * binomial(q, k));
  return out;
}

Ratio naive_polar_rect(int h, int k, const std::vector<Ratio>& u_args,
                       const std::vector<Ratio>& v_args) {
  return naive_polar_rect_counted(h, k, u_args, v_args).value;
}

NaiveValue naive_polar_tri_counted(int h, int k, const std::vector<Point2>& args) {
  const int m = static_cast<int>(args.size());
  if (m > kNaiveTriLimit) {
    throw std::length_error("naive_polar_tri: m exceeds the oracle limit " +
                            std::to_string(kNaiveTriLimit));
  }
  if (h < 0 || k < 0 || h + k > m) {
    throw std::invalid_argument("naive_polar_tri: (h, k) out of range");
  }
  NaiveValue out;
  Ratio sum = 0;
  for_each_combination(m, h, [&](const std::vector<int>& u_idx) {
    Ratio u_prod = 1;
    for (int i : u_idx) u_prod *= args[i].u;
    // J is a k-subset of the complement of I.
    std::vector<int> rest;
    rest.reserve(m - h);
    for (int i = 0, next = 0; i < m; ++i) {
      if (next < h && u_idx[next] == i) {
        ++next;
      } else {
        rest.push_back(i);
      }
    }
    for_each_combination(m - h, k, [&](const std::vector<int>& v_pick) {
      Ratio v_prod = 1;
      for (int j : v_pick) v_prod *= args[rest[j]].v;
      sum += u_prod * v_prod;
      ++out.terms;
    });
  });
  out.value = sum / Ratio(multinomial3(m, h, k));
  return out;
}

Ratio naive_polar_tri(int h, int k, const std::vector<Point2>& args) {
  return naive_polar_tri_counted(h, k, args).value;
}

std::vector<Ratio> decasteljau_curve(const CurveNet& net, const Ratio& t) {
  const Ratio lambda = (t - net.frame.r) / (net.frame.s - net.frame.r);
  auto level = homogeneous_points(net.points, net.homogeneous);
  auto point = decasteljau_collapse(std::move(level), lambda);
  return project_from_homogeneous(std::move(point), "parameter t = " + t.str());
}

std::vector<Ratio> decasteljau_rect(const RectNet& net, const Ratio& u, const Ratio& v) {
  const Ratio lambda_u = (u - net.frames.u.r) / (net.frames.u.s - net.frames.u.r);
  const Ratio lambda_v = (v - net.frames.v.r) / (net.frames.v.s - net.frames.v.r);
  // Collapse each row in v, then the resulting column in u.
  std::vector<std::vector<Ratio>> column;
  column.reserve(net.degree_u + 1);
  for (int i = 0; i <= net.degree_u; ++i) {
    std::vector<std::vector<Ratio>> row;
    row.reserve(net.degree_v + 1);
    for (int j = 0; j <= net.degree_v; ++j) {
      row.push_back(homogeneous_point(net.at(i, j), net.homogeneous));
    }
    column.push_back(decasteljau_collapse(std::move(row), lambda_v));
  }
  auto point = decasteljau_collapse(std::move(column), lambda_u);
  return project_from_homogeneous(std::move(point),
                                  "parameter (u, v) = (" + u.str() + ", " + v.str() + ")");
}

std::vector<Ratio> barycentric(const AffineFrame2& frame, const Point2& uv) {
  // (u,v) - t = lr (r - t) + ls (s - t); lt = 1 - lr - ls.
  const Ratio a = frame.r.u - frame.t.u;
  const Ratio b = frame.s.u - frame.t.u;
  const Ratio c = frame.r.v - frame.t.v;
  const Ratio d = frame.s.v - frame.t.v;
  const Ratio det = a * d - b * c;
  const Ratio x = uv.u - frame.t.u;
  const Ratio y = uv.v - frame.t.v;
  const Ratio lr = (x * d - b * y) / det;
  const Ratio ls = (a * y - x * c) / det;
  return {lr, ls, Ratio(1) - lr - ls};
}

std::vector<Ratio> decasteljau_tri(const TriNet& net, const Point2& uv) {
  const std::vector<Ratio> lambda = barycentric(net.frame, uv);
  const int m = net.degree;
  // level holds b_{i,j,k} for i+j+k = l, laid out like the net.
  std::vector<std::vector<Ratio>> level;
  level.reserve(net.points.size());
  for (const WeightedPoint& pt : net.points) level.push_back(homogeneous_point(pt, net.homogeneous));
  for (int l = m; l >= 1; --l) {
    std::vector<std::vector<Ratio>> next;
    next.reserve(static_cast<std::size_t>(l) * (l + 1) / 2);
    for (int i = 0; i + 1 <= l; ++i) {
      for (int j = 0; i + j + 1 <= l; ++j) {
        const auto& pr = level[TriNet::index_of(l, i + 1, j)];
        const auto& ps = level[TriNet::index_of(l, i, j + 1)];
        const auto& pt = level[TriNet::index_of(l, i, j)];
        std::vector<Ratio> combined(pr.size());
        for (std::size_t c = 0; c < pr.size(); ++c) {
          combined[c] = lambda[0] * pr[c] + lambda[1] * ps[c] + lambda[2] * pt[c];
        }
        next.push_back(std::move(combined));
      }
    }
    level = std::move(next);
  }
  return project_from_homogeneous(std::move(level[0]),
                                  "parameter (u, v) = (" + uv.u.str() + ", " + uv.v.str() + ")");
}

Ratio bernstein_value(int m, int k, const Ratio& t) {
  if (m < 0 || k < 0 || k > m) throw std::invalid_argument("bernstein_value: k out of range");
  return Ratio(binomial(m, k)) * pow(Ratio(1) - t, m - k) * pow(t, k);
}

std::vector<Ratio> bernstein_eval(const CurveNet& net, const Ratio& t) {
  if (net.frame.r != Ratio(0) || net.frame.s != Ratio(1)) {
    throw std::invalid_argument("bernstein_eval: net frame must be (0, 1)");
  }
  const int m = net.degree;
  std::vector<Ratio> acc(dimension(net) + 1, 0);
  for (int k = 0; k <= m; ++k) {
    const Ratio basis = bernstein_value(m, k, t);
    const auto h = homogeneous_point(net.points[k], net.homogeneous);
    for (std::size_t c = 0; c < h.size(); ++c) acc[c] += basis * h[c];
  }
  return project_from_homogeneous(std::move(acc), "parameter t = " + t.str());
}

}  // namespace polarize
