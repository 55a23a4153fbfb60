#pragma once

#include "qcv/numerics/interval.hpp"

namespace qcv::numerics {

enum class Elementary { sin, cos, sqrt, arcsin, arccos, ln, exp, pi };

// Pointwise image enclosure of f over x at the given precision.
Interval enclose_elementary(Elementary f, const Interval& x, mpfr_prec_t prec);

Interval pi_interval(mpfr_prec_t prec);
Interval sin(const Interval& x);
Interval cos(const Interval& x);
Interval sqrt(const Interval& x);
Interval asin(const Interval& x);
Interval acos(const Interval& x);
Interval log(const Interval& x);
Interval exp(const Interval& x);

// x^(twice/2) for x > 0.
Interval pow_half(const Interval& x, int twice);

// Γ(k)/Γ(k+s) for integer k >= 1 and s >= 0 a half-integer (s = twice/2).
// Evaluated as a product of ratios close to one plus a single √π factor, so
// nothing overflows even for k around 10^4.
Interval gamma_ratio(long k, int twice_s, mpfr_prec_t prec);

}  // namespace qcv::numerics
