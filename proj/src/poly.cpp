#include "polarize/poly.hpp"

#include <algorithm>
#include <sstream>

namespace polarize {

namespace {

const Ratio kZero = 0;

// Shared text rendering: coefficient then variable part, terms joined
// with " + " / " - ". Renders the zero polynomial as "0".
void append_term(std::ostringstream& os, bool first, const Ratio& c, const std::string& vars) {
  const bool negative = c < kZero;
  const Ratio mag = negative ? -c : c;
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  if (vars.empty()) {
    os << mag.str();
  } else if (mag == Ratio(1)) {
    os << vars;
  } else {
    os << mag.str() << " " << vars;
  }
}

std::string power_text(const char* var, int exp) {
  std::ostringstream os;
  if (exp == 0) return "";
  os << var;
  if (exp > 1) os << "^" << exp;
  return os.str();
}

}  // namespace

Poly1 Poly1::monomial(int exp, const Ratio& c) {
  Poly1 p;
  p.add_term(exp, c);
  return p;
}

Poly1 Poly1::from_terms(const std::vector<std::pair<int, Ratio>>& terms) {
  Poly1 p;
  for (const auto& [exp, c] : terms) p.add_term(exp, c);
  return p;
}

void Poly1::add_term(int exp, const Ratio& c) {
  if (exp < 0) throw std::invalid_argument("Poly1: negative exponent");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

const Ratio& Poly1::coeff(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? kZero : it->second;
}

bool Poly1::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == Ratio(1);
}

Ratio Poly1::eval(const Ratio& t) const {
  Ratio acc = 0;
  Ratio power = 1;
  int power_exp = 0;
  for (const auto& [exp, c] : coeffs_) {
    power *= pow(t, exp - power_exp);
    power_exp = exp;
    acc += c * power;
  }
  return acc;
}

std::string Poly1::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, c] : coeffs_) {
    append_term(os, first, c, power_text("t", exp));
    first = false;
  }
  return os.str();
}

Poly1& Poly1::operator+=(const Poly1& rhs) {
  for (const auto& [exp, c] : rhs.coeffs_) add_term(exp, c);
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& rhs) {
  for (const auto& [exp, c] : rhs.coeffs_) add_term(exp, -c);
  return *this;
}

Poly1 operator*(const Poly1& lhs, const Poly1& rhs) {
  Poly1 out;
  for (const auto& [ea, ca] : lhs.coeffs_) {
    for (const auto& [eb, cb] : rhs.coeffs_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

Poly1 operator*(const Ratio& c, const Poly1& p) {
  Poly1 out;
  for (const auto& [exp, pc] : p.coeffs_) out.add_term(exp, c * pc);
  return out;
}

Poly1 pow(const Poly1& base, int exp) {
  if (exp < 0) throw std::invalid_argument("pow: negative exponent");
  Poly1 acc = Poly1::constant(1);
  Poly1 sq = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) acc = acc * sq;
    if (e > 1) sq = sq * sq;
  }
  return acc;
}

Poly2 Poly2::monomial(int u_exp, int v_exp, const Ratio& c) {
  Poly2 p;
  p.add_term({u_exp, v_exp}, c);
  return p;
}

Poly2 Poly2::from_terms(const std::vector<std::pair<Exp2, Ratio>>& terms) {
  Poly2 p;
  for (const auto& [exp, c] : terms) p.add_term(exp, c);
  return p;
}

void Poly2::add_term(Exp2 exp, const Ratio& c) {
  if (exp.u < 0 || exp.v < 0) throw std::invalid_argument("Poly2: negative exponent");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

const Ratio& Poly2::coeff(Exp2 exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? kZero : it->second;
}

int Poly2::maxdeg_u() const {
  int d = kZeroDegree;
  for (const auto& [exp, c] : coeffs_) d = std::max(d, exp.u);
  return d;
}

int Poly2::maxdeg_v() const {
  int d = kZeroDegree;
  for (const auto& [exp, c] : coeffs_) d = std::max(d, exp.v);
  return d;
}

int Poly2::total_degree() const {
  int d = kZeroDegree;
  for (const auto& [exp, c] : coeffs_) d = std::max(d, exp.u + exp.v);
  return d;
}

bool Poly2::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == Exp2{0, 0} &&
         coeffs_.begin()->second == Ratio(1);
}

Ratio Poly2::eval(const Ratio& u, const Ratio& v) const {
  Ratio acc = 0;
  for (const auto& [exp, c] : coeffs_) acc += c * pow(u, exp.u) * pow(v, exp.v);
  return acc;
}

std::string Poly2::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, c] : coeffs_) {
    std::string vars = power_text("u", exp.u);
    std::string v_part = power_text("v", exp.v);
    if (!vars.empty() && !v_part.empty()) vars += " ";
    vars += v_part;
    append_term(os, first, c, vars);
    first = false;
  }
  return os.str();
}

Poly2& Poly2::operator+=(const Poly2& rhs) {
  for (const auto& [exp, c] : rhs.coeffs_) add_term(exp, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs) {
  for (const auto& [exp, c] : rhs.coeffs_) add_term(exp, -c);
  return *this;
}

Poly2 operator*(const Poly2& lhs, const Poly2& rhs) {
  Poly2 out;
  for (const auto& [ea, ca] : lhs.coeffs_) {
    for (const auto& [eb, cb] : rhs.coeffs_) out.add_term({ea.u + eb.u, ea.v + eb.v}, ca * cb);
  }
  return out;
}

Poly2 operator*(const Ratio& c, const Poly2& p) {
  Poly2 out;
  for (const auto& [exp, pc] : p.coeffs_) out.add_term(exp, c * pc);
  return out;
}

Poly2 pow(const Poly2& base, int exp) {
  if (exp < 0) throw std::invalid_argument("pow: negative exponent");
  Poly2 acc = Poly2::constant(1);
  Poly2 sq = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) acc = acc * sq;
    if (e > 1) sq = sq * sq;
  }
  return acc;
}

int curve_degree(const CurveMap& map) {
  int d = map.denominator().degree();
  for (const Poly1& p : map.numerators()) d = std::max(d, p.degree());
  return std::max(d, 0);
}

std::pair<int, int> bidegree(const SurfaceMap& map) {
  int p = map.denominator().maxdeg_u();
  int q = map.denominator().maxdeg_v();
  for (const Poly2& n : map.numerators()) {
    p = std::max(p, n.maxdeg_u());
    q = std::max(q, n.maxdeg_v());
  }
  return {std::max(p, 0), std::max(q, 0)};
}

int total_degree(const SurfaceMap& map) {
  int d = map.denominator().total_degree();
  for (const Poly2& n : map.numerators()) d = std::max(d, n.total_degree());
  return std::max(d, 0);
}

}  // namespace polarize
