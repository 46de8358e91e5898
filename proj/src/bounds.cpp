#include "cubicpm/bounds.hpp"

#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "cubicpm/error.hpp"

namespace cubicpm {
namespace {

using boost::multiprecision::cpp_int;

constexpr std::int64_t kExactPowerCap = 4096;

cpp_int pow_int(cpp_int base, std::int64_t e) {
  cpp_int result = 1;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Sign of x - y * 2^(p/q) for x >= 0, y > 0, q > 0.
int compare_power(const cpp_int& x, const cpp_int& y, std::int64_t p, std::int64_t q) {
  if (x == 0) return -1;
  if (q == 1) {
    cpp_int lhs = x;
    cpp_int rhs = y;
    if (p >= 0) rhs <<= static_cast<unsigned>(p);
    else lhs <<= static_cast<unsigned>(-p);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }
  // 2^k < 2^(p/q) < 2^(k+1) since q does not divide p.
  const std::int64_t k = floor_div(p, q);
  auto scaled = [&](std::int64_t shift) {
    cpp_int lhs = x;
    cpp_int rhs = y;
    if (shift >= 0) rhs <<= static_cast<unsigned>(shift);
    else lhs <<= static_cast<unsigned>(-shift);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  };
  if (scaled(k) <= 0) return -1;
  if (scaled(k + 1) >= 0) return 1;
  if (q > kExactPowerCap) {
    throw GraphError(ErrorKind::Overflow, "exponent denominator too large for an exact comparison");
  }
  cpp_int lhs = pow_int(x, q);
  cpp_int rhs = pow_int(y, q);
  if (p >= 0) rhs <<= static_cast<unsigned>(p);
  else lhs <<= static_cast<unsigned>(-p);
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

}  // namespace

Bound Bound::power_of_two(std::int64_t num, std::int64_t den) {
  if (den == 0) throw GraphError(ErrorKind::InvariantViolated, "zero exponent denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  return {Rational(1), num, den};
}

Bound Bound::rational_power(Rational base, int k) {
  Rational value(1);
  for (int i = 0; i < k; ++i) value = value * base;
  return of(value);
}

std::string Bound::str() const {
  if (is_rational()) return coeff.str();
  std::string exponent = log2_den == 1 ? std::to_string(log2_num)
                                       : "(" + std::to_string(log2_num) + "/" + std::to_string(log2_den) + ")";
  std::string power = "2^" + exponent;
  return coeff == Rational(1) ? power : coeff.str() + "*" + power;
}

int compare(const Rational& measured, const Bound& bound) {
  if (bound.is_rational()) {
    const auto c = measured <=> bound.coeff;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  const int ms = measured.num() > 0 ? 1 : (measured.num() < 0 ? -1 : 0);
  const int bs = bound.coeff.num() > 0 ? 1 : (bound.coeff.num() < 0 ? -1 : 0);
  if (ms != bs) return ms < bs ? -1 : 1;
  if (bs == 0) return 0;
  // measured = a/b, coeff = c/d: compare a*d against b*c*2^(p/q).
  cpp_int x = cpp_int(measured.num()) * bound.coeff.den();
  cpp_int y = cpp_int(measured.den()) * bound.coeff.num();
  if (bs < 0) {
    x = -x;
    y = -y;
    return -compare_power(x, y, bound.log2_num, bound.log2_den);
  }
  return compare_power(x, y, bound.log2_num, bound.log2_den);
}

}  // namespace cubicpm
