#pragma once

#include <vector>

#include "qcv/numerics/interval.hpp"
#include "qcv/verifier/certificate.hpp"

namespace qcv::verifier {

using numerics::HalfInteger;

// C̃_ν = (4ν+2) Σ_{k=0}^{4} (-1)^k p_k/(k! (ν+1/2)_k) r^k with, for ν < 5,
// p_k = (6-k)_k (6+ν)_k and r = (ν-√ν+1/2)/((11/2)(ν+11/2)); for ν >= 5,
// p_k = (ν-k+1)_k (2ν+1)_k and r = (ν-√ν+1/2)/((ν+1/2)(2ν+1/2)).
Interval c_tilde(HalfInteger nu, mpfr_prec_t prec = numerics::kDefaultPrecision);

// C̃_{7/2} <= 9.19 or C̃_{9/2} <= 11.02.
Certificate check_c_tilde(HalfInteger nu, mpfr_prec_t prec = numerics::kDefaultPrecision);

// max_{[-1,1]} |(1-x²) F_n^ν| <= C̃_ν/(n(n+2ν)), certified on the θ-grid.
// Parity reduces the domain to [0, 1].
Certificate check_one_minus_x2_bound(int n, HalfInteger nu, mpfr_prec_t prec = numerics::kDefaultPrecision);

// c_n bounds for n > 428: (1/n)(C̃_{7/2}/(n+8) + C̃_{9/2}) at n = 429, the
// same with the index shift that covers c_429 = c_428^{7/2}, and 11.1/(n-1).
std::vector<Certificate> tail_bound_certificates(mpfr_prec_t prec = numerics::kDefaultPrecision);

}  // namespace qcv::verifier
