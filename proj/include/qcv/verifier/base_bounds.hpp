#pragma once

#include <vector>

#include "qcv/verifier/certificate.hpp"
#include "qcv/verifier/context.hpp"

namespace qcv::verifier {

// (9/440)(29 - 74/(9α))(7 - 1/α), the β bound as printed.
Rational beta_bound_printed(const Rational& alpha);
// Smallest β > 0 allowed by D >= 0:
//   (29 - 74/(9α))(7 - 1/α) / (10(13/(9α) + 2)).
Rational beta_min(const Rational& alpha);
Interval beta_min(const Interval& alpha);
// (256/35)(74/(9α) - 29)(7 - 1/α) + (512/7)(13/(9α) + 2)/α; must be >= 0.
Rational alpha_constraint(const Rational& alpha);

struct BaseBounds {
  Interval beta_lower;   // min of the β bound over the α-interval
  Interval alpha_upper;  // root of alpha_constraint
  Interval a_upper;      // max of (6/7)(1 - αβ) over admissible (α, β)
};

// Root isolated by exact bisection on [1/2, 1] to width 2^-bits.
Interval alpha_root(int bits = 64, mpfr_prec_t prec = numerics::kDefaultPrecision);

BaseBounds base_bounds(const VerificationContext& ctx, mpfr_prec_t prec = numerics::kDefaultPrecision);

// β at α = 1/2, β over the α-interval, the α root, a_upper against the
// printed 0.221 and against the base-case target 16/λ₅.
std::vector<Certificate> base_bound_certificates(const VerificationContext& ctx,
                                                 mpfr_prec_t prec = numerics::kDefaultPrecision);

}  // namespace qcv::verifier
