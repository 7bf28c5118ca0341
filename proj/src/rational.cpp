#include "tsaudit/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "tsaudit/errors.hpp"

namespace tsaudit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long long value) {
  // mpq_class has no long long constructor on every platform; go through text.
  value_.set_str(std::to_string(value), 10);
}

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  mpz_class num(std::to_string(numerator), 10);
  mpz_class den(std::to_string(denominator), 10);
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw ParseError("rational \"" + std::string(text) + "\" has zero denominator");
  }
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational& Rational::operator+=(const Rational& other) {
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  mpq_mul(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  mpq_div(value_.get_mpq_t(), value_.get_mpq_t(), other.value_.get_mpq_t());
  return *this;
}

void Rational::sub_product(const Rational& a, const Rational& b, mpq_class& scratch) {
  mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
}

void Rational::add_product(const Rational& a, const Rational& b, mpq_class& scratch) {
  mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw StructureError("dot product of vectors with different lengths");
  Rational total;
  mpq_class scratch;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero() || b[k].is_zero()) continue;
    total.add_product(a[k], b[k], scratch);
  }
  return total;
}

Rational sum(const RationalVector& v) {
  Rational total;
  for (const auto& x : v) total += x;
  return total;
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_rational_list(const RationalVector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += v[k].str();
  }
  return out;
}

}  // namespace tsaudit
