#pragma once

#include <array>
#include <functional>

#include "qcv/asymptotics/expansion.hpp"
#include "qcv/verifier/certificate.hpp"

namespace qcv::asymptotics {

// The five terms E_0..E_4 of the l = k sin ζ decomposition, each enclosed
// over the whole l interval.
std::array<Interval, 5> e_terms(const Interval& l, long k);

// (1 - 16/k) Σ_{m<4} t_m(3) (k+7/2+m)_{3-m} / (k^{3-m} l^{m+7/2}) (cos(l - (7/2-m)π/2) - (3+m) l/k),
// the expression the E-terms are meant to expand.
Interval e_source_expression(const Interval& l, long k);

// Bound on |R̃| in the l parameterization: for l <= k/√2
//   |t_4| Γ(k)/Γ(k+15/2) (k/l)^{15/2} / √(1-l²/k²),
// beyond it 2|t_4| Γ(k)/Γ(k+15/2) (k/l)^{13/2}.
Interval e_route_remainder(const Interval& l, long k, const Interval& gamma_ratio_15_2);

struct CellSearchResult {
  verifier::Verdict verdict = verifier::Verdict::inconclusive;
  Rational lower;  // certified lower bound over the whole range
  Rational upper;  // smallest cell upper bound (an upper bound for the minimum)
  double worst_l = 0.0;
  long cells = 0;
};

// Adaptive cover of [l_lo, l_hi]: geometric initial cells (ratio 1.05),
// bisected until each cell's enclosure clears `threshold`.
CellSearchResult search_l_range(const std::function<Interval(const Interval&)>& f, double l_lo, double l_hi,
                                const Rational& threshold, mpfr_prec_t prec, int max_depth = 40);

// Lower end of the l-range: k √(1 - b²) with b the certified bound on the
// location of the minimum of F̃'_k (largest zero of C_{k-2}^{9/2}).
double l_min_for(long k, mpfr_prec_t prec);

CellSearchResult e_route(long k, mpfr_prec_t prec = numerics::kDefaultPrecision);
CellSearchResult direct_route(long k, mpfr_prec_t prec = numerics::kDefaultPrecision);

// min_{[0,1]} F̃'_k >= -1/25 for k > 200. Pass needs both routes to Pass.
verifier::Certificate check_lower_bound_large_k(long k, mpfr_prec_t prec = numerics::kDefaultPrecision);

// ΣE_i against the expression it should expand, at one l. Reported as an
// equality claim on the difference.
verifier::Certificate check_e_identity(long k, const Rational& l, mpfr_prec_t prec = numerics::kDefaultPrecision);

}  // namespace qcv::asymptotics
