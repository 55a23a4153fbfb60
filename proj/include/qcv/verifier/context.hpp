#pragma once

#include "qcv/numerics/interval.hpp"
#include "qcv/numerics/rational.hpp"
#include "qcv/orthopoly/gegenbauer.hpp"

namespace qcv::verifier {

using numerics::Interval;
using numerics::make_rational;
using numerics::Rational;

// Constants of the induction argument plus the index it is applied at.
struct VerificationContext {
  Rational alpha_lo = make_rational(1, 2);
  Rational alpha_hi = make_rational(289, 500);  // 0.578
  Rational b = make_rational(33, 100);
  Rational d = Rational(8);
  Rational d0 = Rational(16);
  Rational m0 = make_rational(1, 25);
  long n = 5;

  // a ∈ [d0/λ_{n+4}, d0/λ_n].
  Rational a_lo() const { return d0 / Rational(orthopoly::lambda(n + 4)); }
  Rational a_hi() const { return d0 / Rational(orthopoly::lambda(n)); }
  Interval alpha(mpfr_prec_t prec = numerics::kDefaultPrecision) const { return Interval(alpha_lo, alpha_hi, prec); }

  VerificationContext at(long index) const {
    VerificationContext c = *this;
    c.n = index;
    return c;
  }
};

}  // namespace qcv::verifier
