#pragma once

#include <vector>

#include "qcv/numerics/interval.hpp"
#include "qcv/numerics/rational.hpp"

namespace qcv::asymptotics {

using numerics::Interval;
using numerics::Rational;

// t_m(μ) = (1/2-μ)_m (1/2+μ)_m / ((-2)^m m!).
Rational t_coeff(int m, const Rational& mu = Rational(3));

struct ExpansionTerm {
  int m = 0;
  Rational t_coeff;
  Interval gamma_ratio;  // Γ(k)/Γ(k+m+7/2)
  Interval phase_cos;    // cos δ_{k-1,m}
  Interval sine_power;   // sin^{m+7/2} ζ
};

struct RemainderBound {
  int N = 4;
  Interval zeta;
  Interval bound;  // bound on |R̃| in the F̃'_k normalization
};

// Large-degree expansion of F̃'_k(cos ζ) = F_{k-1}^{7/2}(cos ζ):
//   48√(2/π) (Σ_{m<N} t_m(3) Γ(k)/Γ(k+m+7/2) cos δ_{k-1,m} / sin^{m+7/2} ζ + R̃),
//   δ_{k-1,m} = (k+m+5/2) ζ - (7/2-m) π/2,
//   |R̃| <= |t_N(3)| Γ(k)/Γ(k+N+7/2) sin^{-(N+7/2)} ζ · {sec ζ if ζ <= π/4 or ζ >= 3π/4; 2 sin ζ otherwise}.
// The Γ-ratios depend only on k and are computed once.
class AsymptoticExpansion {
 public:
  AsymptoticExpansion(long k, int N = 4, mpfr_prec_t prec = numerics::kDefaultPrecision);

  long k() const { return k_; }
  int order() const { return N_; }
  mpfr_prec_t precision() const { return prec_; }

  std::vector<ExpansionTerm> terms(const Interval& zeta) const;
  RemainderBound remainder(const Interval& zeta) const;
  // Σ_{m<N} terms (without the 48√(2/π) prefactor).
  Interval partial_sum(const Interval& zeta) const;
  // Enclosure of F̃'_k(cos ζ) for every ζ in zeta.
  Interval f_tilde_prime(const Interval& zeta) const;
  Interval prefactor() const;  // 48√(2/π)

 private:
  void check_zeta(const Interval& zeta) const;

  long k_;
  int N_;
  mpfr_prec_t prec_;
  std::vector<Rational> t_;
  std::vector<Interval> gamma_;  // index 0..N
};

// Enclosure of C_{k-1}^{7/2}(cos ζ); equals F̃'_k(cos ζ)·λ_k(λ_k+4)(λ_k+6)/720.
Interval asymptotic_enclosure(long k, const Interval& zeta, int N = 4,
                              mpfr_prec_t prec = numerics::kDefaultPrecision);

}  // namespace qcv::asymptotics
