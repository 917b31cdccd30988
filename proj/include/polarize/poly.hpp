#pragma once

#include "polarize/ratio.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polarize {

/// degree() of the zero polynomial (stands in for -infinity).
inline constexpr int kZeroDegree = -1;

/// Sparse univariate polynomial in t with exact rational coefficients.
/// Stored zero coefficients are never kept.
class Poly1 {
public:
  Poly1() = default;  // zero polynomial

  static Poly1 constant(const Ratio& c) { return monomial(0, c); }
  static Poly1 variable() { return monomial(1, 1); }
  static Poly1 monomial(int exp, const Ratio& c);

  /// Sums duplicate exponents; entries that cancel disappear.
  static Poly1 from_terms(const std::vector<std::pair<int, Ratio>>& terms);

  /// Accumulates c * t^exp. Throws std::invalid_argument for exp < 0.
  void add_term(int exp, const Ratio& c);

  /// Coefficient of t^exp (zero if absent).
  const Ratio& coeff(int exp) const;

  const std::map<int, Ratio>& terms() const { return coeffs_; }
  int degree() const { return coeffs_.empty() ? kZeroDegree : coeffs_.rbegin()->first; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;

  Ratio eval(const Ratio& t) const;

  /// Canonical monomial-sum text, ascending exponents (e.g. "4 t - 64 t^3").
  std::string str() const;

  Poly1& operator+=(const Poly1& rhs);
  Poly1& operator-=(const Poly1& rhs);
  friend Poly1 operator+(Poly1 lhs, const Poly1& rhs) { return lhs += rhs; }
  friend Poly1 operator-(Poly1 lhs, const Poly1& rhs) { return lhs -= rhs; }
  friend Poly1 operator*(const Poly1& lhs, const Poly1& rhs);
  friend Poly1 operator*(const Ratio& c, const Poly1& p);
  friend bool operator==(const Poly1& lhs, const Poly1& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

private:
  std::map<int, Ratio> coeffs_;
};

Poly1 pow(const Poly1& base, int exp);

/// Exponent pair of a bivariate monomial u^u_exp * v^v_exp.
struct Exp2 {
  int u = 0;
  int v = 0;
  auto operator<=>(const Exp2&) const = default;
};

/// Sparse bivariate polynomial in u, v with exact rational coefficients.
class Poly2 {
public:
  Poly2() = default;  // zero polynomial

  static Poly2 constant(const Ratio& c) { return monomial(0, 0, c); }
  static Poly2 variable_u() { return monomial(1, 0, 1); }
  static Poly2 variable_v() { return monomial(0, 1, 1); }
  static Poly2 monomial(int u_exp, int v_exp, const Ratio& c);
  static Poly2 from_terms(const std::vector<std::pair<Exp2, Ratio>>& terms);

  void add_term(Exp2 exp, const Ratio& c);
  const Ratio& coeff(Exp2 exp) const;

  const std::map<Exp2, Ratio>& terms() const { return coeffs_; }
  int maxdeg_u() const;
  int maxdeg_v() const;
  int total_degree() const;  // max over terms of u+v, kZeroDegree when zero
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;

  Ratio eval(const Ratio& u, const Ratio& v) const;

  std::string str() const;

  Poly2& operator+=(const Poly2& rhs);
  Poly2& operator-=(const Poly2& rhs);
  friend Poly2 operator+(Poly2 lhs, const Poly2& rhs) { return lhs += rhs; }
  friend Poly2 operator-(Poly2 lhs, const Poly2& rhs) { return lhs -= rhs; }
  friend Poly2 operator*(const Poly2& lhs, const Poly2& rhs);
  friend Poly2 operator*(const Ratio& c, const Poly2& p);
  friend bool operator==(const Poly2& lhs, const Poly2& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

private:
  std::map<Exp2, Ratio> coeffs_;
};

Poly2 pow(const Poly2& base, int exp);

/// Parametric map with d numerator polynomials over one shared denominator.
/// The polynomial case is exactly denominator == 1.
template <class P>
class RationalMap {
public:
  explicit RationalMap(std::vector<P> numerators, P denominator = P::constant(1))
      : numerators_(std::move(numerators)), denominator_(std::move(denominator)) {
    if (numerators_.empty()) {
      throw std::invalid_argument("RationalMap: needs at least one numerator");
    }
    if (denominator_.is_zero()) {
      throw std::invalid_argument("RationalMap: zero denominator polynomial");
    }
  }

  const std::vector<P>& numerators() const { return numerators_; }
  const P& denominator() const { return denominator_; }
  int dimension() const { return static_cast<int>(numerators_.size()); }
  bool is_polynomial() const { return denominator_.is_one(); }

private:
  std::vector<P> numerators_;
  P denominator_;
};

using CurveMap = RationalMap<Poly1>;
using SurfaceMap = RationalMap<Poly2>;

/// Maximum degree over numerators and denominator (>= 0: the denominator
/// is nonzero, so a constant map reports 0).
int curve_degree(const CurveMap& map);
std::pair<int, int> bidegree(const SurfaceMap& map);
int total_degree(const SurfaceMap& map);

}  // namespace polarize
