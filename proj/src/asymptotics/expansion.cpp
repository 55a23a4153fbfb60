#include "qcv/asymptotics/expansion.hpp"

#include <stdexcept>

#include "qcv/numerics/elementary.hpp"

namespace qcv::asymptotics {

using numerics::make_rational;

Rational t_coeff(int m, const Rational& mu) {
  if (m < 0) throw std::invalid_argument("t_coeff needs m >= 0");
  const Rational half = make_rational(1, 2);
  Rational r = numerics::pochhammer(half - mu, m) * numerics::pochhammer(half + mu, m);
  numerics::Integer den = numerics::factorial(m) << m;
  r /= Rational(den);
  return m % 2 ? Rational(-r) : r;
}

AsymptoticExpansion::AsymptoticExpansion(long k, int N, mpfr_prec_t prec) : k_(k), N_(N), prec_(prec) {
  if (k < 2) throw std::invalid_argument("expansion needs k >= 2");
  if (N < 3) throw std::invalid_argument("expansion needs N >= 3");
  for (int m = 0; m <= N; ++m) {
    t_.push_back(t_coeff(m));
    gamma_.push_back(numerics::gamma_ratio(k, 2 * m + 7, prec));
  }
}

void AsymptoticExpansion::check_zeta(const Interval& zeta) const {
  const Interval pi = numerics::pi_interval(prec_);
  if (!zeta.certainly_positive() || mpfr_cmp(zeta.hi(), pi.lo()) >= 0)
    throw numerics::DomainError("zeta must stay inside (0, pi)");
}

Interval AsymptoticExpansion::prefactor() const {
  const Interval two_over_pi = Interval(Rational(2), prec_) / numerics::pi_interval(prec_);
  return numerics::sqrt(two_over_pi) * Rational(48);
}

std::vector<ExpansionTerm> AsymptoticExpansion::terms(const Interval& zeta) const {
  check_zeta(zeta);
  const Interval s = numerics::sin(zeta);
  const Interval half_pi = numerics::pi_interval(prec_) / Rational(2);
  std::vector<ExpansionTerm> out;
  for (int m = 0; m < N_; ++m) {
    ExpansionTerm t;
    t.m = m;
    t.t_coeff = t_[m];
    t.gamma_ratio = gamma_[m];
    // Phase reduction happens inside cos() against an enclosure of π.
    const Interval delta = zeta * make_rational(2 * k_ + 2 * m + 5, 2) - half_pi * make_rational(7 - 2 * m, 2);
    t.phase_cos = numerics::cos(delta);
    t.sine_power = numerics::pow_half(s, 2 * m + 7);
    out.push_back(std::move(t));
  }
  return out;
}

RemainderBound AsymptoticExpansion::remainder(const Interval& zeta) const {
  check_zeta(zeta);
  const Interval s = numerics::sin(zeta);
  const Interval pi = numerics::pi_interval(prec_);
  const Interval quarter = pi / Rational(4), three_quarter = pi * make_rational(3, 4);
  // Factor: sec ζ near the ends, 2 sin ζ in the middle; a cell straddling a
  // switch point takes the hull of both.
  const bool certainly_end = mpfr_cmp(zeta.hi(), quarter.lo()) <= 0 || mpfr_cmp(zeta.lo(), three_quarter.hi()) >= 0;
  const bool certainly_middle = mpfr_cmp(zeta.lo(), quarter.hi()) > 0 && mpfr_cmp(zeta.hi(), three_quarter.lo()) < 0;
  Interval factor(prec_);
  auto sec = [&] { return Rational(1) / numerics::abs(numerics::cos(zeta)); };
  if (certainly_end) {
    factor = sec();
  } else if (certainly_middle) {
    factor = s * Rational(2);
  } else {
    factor = numerics::hull(sec(), s * Rational(2));
  }
  RemainderBound r;
  r.N = N_;
  r.zeta = zeta;
  r.bound = gamma_[N_] * abs(t_[N_]) * factor / numerics::pow_half(s, 2 * N_ + 7);
  return r;
}

Interval AsymptoticExpansion::partial_sum(const Interval& zeta) const {
  Interval sum(Rational(0), prec_);
  for (const auto& t : terms(zeta)) sum += t.gamma_ratio * t.t_coeff * t.phase_cos / t.sine_power;
  return sum;
}

Interval AsymptoticExpansion::f_tilde_prime(const Interval& zeta) const {
  const Interval r = remainder(zeta).bound;
  const Interval sum = partial_sum(zeta);
  const Interval with_rem(sum.lo_rational() - r.hi_rational(), sum.hi_rational() + r.hi_rational(), prec_);
  return prefactor() * with_rem;
}

Interval asymptotic_enclosure(long k, const Interval& zeta, int N, mpfr_prec_t prec) {
  const AsymptoticExpansion e(k, N, prec);
  Rational scale(1);
  for (long j = 0; j < 6; ++j) scale *= Rational(k + j);  // (k)_6 = λ_k(λ_k+4)(λ_k+6)
  return e.f_tilde_prime(zeta) * (scale / 720);
}

}  // namespace qcv::asymptotics
