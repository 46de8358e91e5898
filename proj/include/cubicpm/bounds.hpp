#pragma once

#include <cstdint>
#include <string>

#include "cubicpm/rational.hpp"

namespace cubicpm {

/// coeff * 2^(log2_num / log2_den), log2_den > 0, exponent in lowest terms.
struct Bound {
  Rational coeff{1};
  std::int64_t log2_num = 0;
  std::int64_t log2_den = 1;

  static Bound of(Rational value) { return {value, 0, 1}; }
  static Bound power_of_two(std::int64_t num, std::int64_t den);
  /// base^k for a nonnegative integer k. Throws Overflow.
  static Bound rational_power(Rational base, int k);

  bool is_rational() const { return log2_num == 0; }
  std::string str() const;
  friend bool operator==(const Bound&, const Bound&) = default;
};

/// Sign of (measured - bound), decided with exact integer arithmetic.
/// Throws Overflow when the exponent denominator is too large to decide a
/// close call exactly.
int compare(const Rational& measured, const Bound& bound);

}  // namespace cubicpm
