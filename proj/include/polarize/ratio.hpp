#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polarize {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational scalar.
///
/// Values are always canonical: the denominator is positive,
/// gcd(|numerator|, denominator) = 1, and zero is stored as 0/1.
/// The text form is "n" or "n/d" with an optional leading "-".
class Ratio {
public:
  Ratio() = default;
  Ratio(int n) : value_(n) {}
  Ratio(long n) : value_(n) {}
  Ratio(long long n) : value_(n) {}
  Ratio(const BigInt& n) : value_(n) {}

  /// Builds num/den in canonical form. Throws std::domain_error if den == 0.
  Ratio(const BigInt& num, const BigInt& den);

  /// Parses "n" or "n/d" (optional leading '-', surrounding blanks allowed).
  /// Throws std::invalid_argument on malformed text or a zero denominator.
  static Ratio parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }

  std::string str() const { return value_.str(); }

  Ratio operator-() const;

  Ratio& operator+=(const Ratio& rhs);
  Ratio& operator-=(const Ratio& rhs);
  Ratio& operator*=(const Ratio& rhs);
  /// Throws std::domain_error when rhs is zero.
  Ratio& operator/=(const Ratio& rhs);

  friend Ratio operator+(Ratio lhs, const Ratio& rhs) { return lhs += rhs; }
  friend Ratio operator-(Ratio lhs, const Ratio& rhs) { return lhs -= rhs; }
  friend Ratio operator*(Ratio lhs, const Ratio& rhs) { return lhs *= rhs; }
  friend Ratio operator/(Ratio lhs, const Ratio& rhs) { return lhs /= rhs; }

  friend bool operator==(const Ratio& lhs, const Ratio& rhs) { return lhs.value_ == rhs.value_; }
  friend bool operator!=(const Ratio& lhs, const Ratio& rhs) { return lhs.value_ != rhs.value_; }
  friend bool operator<(const Ratio& lhs, const Ratio& rhs) { return lhs.value_ < rhs.value_; }
  friend bool operator<=(const Ratio& lhs, const Ratio& rhs) { return lhs.value_ <= rhs.value_; }
  friend bool operator>(const Ratio& lhs, const Ratio& rhs) { return lhs.value_ > rhs.value_; }
  friend bool operator>=(const Ratio& lhs, const Ratio& rhs) { return lhs.value_ >= rhs.value_; }

private:
  boost::multiprecision::cpp_rational value_;
};

/// base^exp for exp >= 0, with 0^0 = 1.
Ratio pow(const Ratio& base, int exp);

std::ostream& operator<<(std::ostream& os, const Ratio& r);

}  // namespace polarize
