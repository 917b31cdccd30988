#include "polarize/ratio.hpp"

#include <cctype>
#include <ostream>

namespace polarize {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Ratio::Ratio(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw std::domain_error("Ratio: zero denominator");
  if (den < 0) {
    value_ = boost::multiprecision::cpp_rational(-num, BigInt(-den));
  } else {
    value_ = boost::multiprecision::cpp_rational(num, den);
  }
}

Ratio Ratio::parse(std::string_view text) {
  const std::string_view src = trim(text);
  std::string_view body = src;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  if (!all_digits(num_text)) {
    throw std::invalid_argument("Ratio: malformed rational \"" + std::string(text) + "\"");
  }
  BigInt num{std::string(num_text)};
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    std::string_view den_text = body.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw std::invalid_argument("Ratio: malformed rational \"" + std::string(text) + "\"");
    }
    den = BigInt{std::string(den_text)};
    if (den.is_zero()) {
      throw std::invalid_argument("Ratio: zero denominator in \"" + std::string(text) + "\"");
    }
  }
  if (negative) num = -num;
  return Ratio(num, den);
}

Ratio Ratio::operator-() const {
  Ratio out;
  out.value_ = -value_;
  return out;
}

Ratio& Ratio::operator+=(const Ratio& rhs) {
  value_ += rhs.value_;
  return *this;
}

Ratio& Ratio::operator-=(const Ratio& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Ratio& Ratio::operator*=(const Ratio& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Ratio& Ratio::operator/=(const Ratio& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Ratio: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Ratio pow(const Ratio& base, int exp) {
  if (exp < 0) throw std::domain_error("pow: negative exponent");
  Ratio acc = 1;
  Ratio sq = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) acc *= sq;
    if (e > 1) sq *= sq;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

}  // namespace polarize
