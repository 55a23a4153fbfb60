#pragma once

#include <array>

#include "qcv/numerics/rational.hpp"
#include "qcv/verifier/certificate.hpp"

namespace qcv::verifier {

// S₁..S₇ for odd n ≥ 5, indexed 0..6. 11/(7α) is instantiated at α = 1/2.
//   S₁ = Σ_{k=2}^{(n-3)/2} w_k,  S₂ = Σ w_k λ_k,  S₃ = Σ w_k λ_k²,  w_k = (λ_{n+1} - λ_k + 22/7)(2k+5)
//   S₄ = Σ_{k=(n-1)/2}^{n} w_k,  S₅ = Σ (2k+5)/λ_k,  S₆ = Σ (2k+5),  S₇ = Σ (2k+5)/λ_k²
using SumSet = std::array<Rational, 7>;

// Closed forms for S₁..S₄ and S₆, the telescoped forms Σ(1/k + 1/(k+5)) for
// S₅ and the seven-term rational form for S₇.
SumSet closed_form_sums(long n);

// Plain summation of the defining series.
SumSet direct_sums(long n);

// The S₂ and S₃ polynomials as printed; three S₂ coefficients and one S₃
// sign differ from the series.
Rational printed_s2(long n);
Rational printed_s3(long n);

// Closed form against direct summation, exact equality per S_i.
Certificate check_sum_identity(long n);
// S₅ >= 1.3863 and S₇ <= 3/n².
Certificate check_s5_lower(long n);
Certificate check_s7_upper(long n);

}  // namespace qcv::verifier
