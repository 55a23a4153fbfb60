#pragma once

#include "qcv/numerics/interval.hpp"
#include "qcv/numerics/rational.hpp"

namespace qcv::verifier {

using numerics::Interval;
using numerics::Rational;

// B_k = (9α²/32)(λ_{n+1} - λ_k + 11/(7α))(2k+5).
Rational b_coefficient(long n, long k, const Rational& alpha);

// (B_{k+1} - B_k)/(B_{k+1} + B_k) in the reduced form
//   ((n²+7n-3k²-18k-15) + 11/(7α)) / ((k+3)((2n²+14n-2k²-12k+5) + 22/(7α))).
Rational b_quotient(long n, long k, const Rational& alpha);

// Hull of the quotient at both ends of the α-interval (it is monotone in α).
Interval b_quotient(long n, long k, const Interval& alpha);

}  // namespace qcv::verifier
