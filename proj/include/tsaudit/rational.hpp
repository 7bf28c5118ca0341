#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tsaudit {

/// Exact arbitrary-precision fraction, always in lowest terms with a positive
/// denominator. Division by zero throws std::domain_error.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}  // NOLINT: integers convert implicitly
  Rational(long value) : value_(value) {}  // NOLINT
  Rational(long long value);               // NOLINT
  Rational(long long numerator, long long denominator);

  /// Accepts "p", "-p", "p/q", "-p/q" with decimal digits only.
  static Rational parse(std::string_view text);

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;
  double to_double() const { return value_.get_d(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  Rational abs() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// this -= a * b and this += a * b, reusing a caller-owned temporary.
  void sub_product(const Rational& a, const Rational& b, mpq_class& scratch);
  void add_product(const Rational& a, const Rational& b, mpq_class& scratch);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RationalVector = std::vector<Rational>;

Rational dot(const RationalVector& a, const RationalVector& b);
Rational sum(const RationalVector& v);

/// Comma separated rationals, e.g. "1/10,0,9/10".
RationalVector parse_rational_list(std::string_view text);
std::string format_rational_list(const RationalVector& v);

}  // namespace tsaudit
