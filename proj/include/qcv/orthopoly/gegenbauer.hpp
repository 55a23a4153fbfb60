#pragma once

#include <vector>

#include "qcv/numerics/interval.hpp"
#include "qcv/numerics/polynomial.hpp"
#include "qcv/numerics/rational.hpp"

namespace qcv::orthopoly {

using numerics::HalfInteger;
using numerics::Interval;
using numerics::Polynomial;
using numerics::Rational;

inline constexpr HalfInteger kNu52{5};
inline constexpr HalfInteger kNu72{7};
inline constexpr HalfInteger kNu92{9};

constexpr long lambda(long k) { return k * (k + 5); }

// F_k^ν = C_k^ν / C_k^ν(1). Built by the degree recurrence
//   F_{k+1} = (2(k+ν) x F_k - k F_{k-1}) / (k + 2ν),
// which already carries the normalization F(1) = 1. Results are cached per
// order (write-once, thread safe).
Polynomial normalized_gegenbauer(int k, HalfInteger nu);

// F̃'_k = F_{k-1}^{7/2}.
Polynomial f_tilde_prime(int k);

// (1-x²)p'' - (2ν+1)x p' + k(k+2ν) p == 0 exactly.
bool check_ode_identity(const Polynomial& p, int k, HalfInteger nu);
bool check_ode_identity(int k, HalfInteger nu);

// (F_k^ν)' == k(k+2ν)/(2ν+1) F_{k-1}^{μ}; the identity holds for μ = ν+1.
bool check_derivative_identity(int k, HalfInteger nu, HalfInteger mu);
bool check_derivative_identity(int k, HalfInteger nu);

// ∫_{-1}^{1} (1-x²)² F_k F_l dx for the ν = 5/2 family.
Rational weighted_inner_product(int k, int l);
Rational orthogonality_constant(int k);  // 128/((2k+5)(λ_k+4)(λ_k+6))

// Upper bound for the largest zero of C_n^ν:
//   √((n-1)(n+2ν-2)/((n+ν-2)(n+ν-1))) cos(π/(n+1)).
Interval largest_zero_upper_bound(int n, HalfInteger nu, mpfr_prec_t prec = numerics::kDefaultPrecision);

}  // namespace qcv::orthopoly
