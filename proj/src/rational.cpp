#include "cubicpm/rational.hpp"

#include <numeric>

#include "cubicpm/error.hpp"

namespace cubicpm {
namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw GraphError(ErrorKind::Overflow, "rational multiply");
  return out;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw GraphError(ErrorKind::Overflow, "rational add");
  return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw GraphError(ErrorKind::InvariantViolated, "zero denominator");
  if (den < 0) {
    num = mul(num, -1);
    den = mul(den, -1);
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational operator+(const Rational& x, const Rational& y) {
  const std::int64_t g = std::gcd(x.den_, y.den_);
  return {add(mul(x.num_, y.den_ / g), mul(y.num_, x.den_ / g)), mul(x.den_ / g, y.den_)};
}

Rational operator-(const Rational& x, const Rational& y) { return x + Rational(mul(y.num_, -1), y.den_); }

Rational operator*(const Rational& x, const Rational& y) {
  const std::int64_t g1 = std::gcd(x.num_, y.den_);
  const std::int64_t g2 = std::gcd(y.num_, x.den_);
  return {mul(x.num_ / (g1 ? g1 : 1), y.num_ / (g2 ? g2 : 1)), mul(x.den_ / (g2 ? g2 : 1), y.den_ / (g1 ? g1 : 1))};
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) throw GraphError(ErrorKind::InvariantViolated, "division by zero");
  return x * Rational(y.den_, y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  __extension__ using wide = __int128;
  const wide lhs = static_cast<wide>(x.num_) * y.den_;
  const wide rhs = static_cast<wide>(y.num_) * x.den_;
  return lhs <=> rhs;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace cubicpm
