#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcv::numerics {

// Exact rational scalar. gmpxx keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

enum class Direction { down, up, nearest };

Rational make_rational(long num, long den = 1);

// Accepts "p/q", "p", or a plain decimal such as "0.33" or "-1.5e-3".
Rational parse_rational(std::string_view text);

std::string to_fraction_string(const Rational& q);

// Decimal rendering with `digits` significant digits, rounded in `dir`.
// down/up give a one-sided bound on q, so the printed value is safe to use as
// an enclosure endpoint.
std::string to_decimal_string(const Rational& q, int digits, Direction dir);

double to_double(const Rational& q);

Rational pochhammer(const Rational& x, int n);
Integer factorial(int n);

struct HalfInteger {
  int twice;

  constexpr explicit HalfInteger(int twice_value) : twice(twice_value) {
    if (twice_value < 1) throw std::invalid_argument("HalfInteger requires twice_value >= 1");
  }
  static constexpr HalfInteger from_integer(int v) { return HalfInteger(2 * v); }

  Rational value() const { return make_rational(twice, 2); }
  bool is_integer() const { return twice % 2 == 0; }
  friend bool operator==(HalfInteger a, HalfInteger b) { return a.twice == b.twice; }
};

std::string to_string(HalfInteger h);

}  // namespace qcv::numerics
