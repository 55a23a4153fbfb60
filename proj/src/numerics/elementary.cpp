#include "qcv/numerics/elementary.hpp"

namespace qcv::numerics {

namespace {

using UnaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Interval monotone_increasing(const Interval& x, UnaryOp f) {
  Interval r(x.precision());
  f(r.lo_mut(), x.lo(), MPFR_RNDD);
  f(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Interval monotone_decreasing(const Interval& x, UnaryOp f) {
  Interval r(x.precision());
  f(r.lo_mut(), x.hi(), MPFR_RNDD);
  f(r.hi_mut(), x.lo(), MPFR_RNDU);
  return r;
}

// Image of a 2π-periodic function with maxima at t ∈ 2Z and minima at
// t ∈ 2Z+1, where t = x/π - shift. Endpoint values come from MPFR with
// directed rounding; any lattice point possibly inside x contributes ±1.
Interval periodic(const Interval& x, UnaryOp f, const Rational& shift) {
  const mpfr_prec_t prec = x.precision();
  Interval r(prec);
  mpfr_t a, b;
  mpfr_inits2(prec, a, b, static_cast<mpfr_ptr>(nullptr));
  f(a, x.lo(), MPFR_RNDD);
  f(b, x.hi(), MPFR_RNDD);
  mpfr_min(r.lo_mut(), a, b, MPFR_RNDD);
  f(a, x.lo(), MPFR_RNDU);
  f(b, x.hi(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), a, b, MPFR_RNDU);
  mpfr_clears(a, b, static_cast<mpfr_ptr>(nullptr));

  Interval t = x / pi_interval(prec) - shift;
  Integer first, last;
  mpfr_get_z(first.get_mpz_t(), t.lo(), MPFR_RNDU);
  mpfr_get_z(last.get_mpz_t(), t.hi(), MPFR_RNDD);
  if (first <= last) {
    const bool has_even = (first != last) || mpz_even_p(first.get_mpz_t());
    const bool has_odd = (first != last) || mpz_odd_p(first.get_mpz_t());
    if (has_even) mpfr_set_si(r.hi_mut(), 1, MPFR_RNDU);
    if (has_odd) mpfr_set_si(r.lo_mut(), -1, MPFR_RNDD);
  }
  // Directed rounding can overshoot [-1, 1] by an ulp; clip.
  if (mpfr_cmp_si(r.lo(), -1) < 0) mpfr_set_si(r.lo_mut(), -1, MPFR_RNDD);
  if (mpfr_cmp_si(r.hi(), 1) > 0) mpfr_set_si(r.hi_mut(), 1, MPFR_RNDU);
  return r;
}

}  // namespace

Interval pi_interval(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_mut(), MPFR_RNDD);
  mpfr_const_pi(r.hi_mut(), MPFR_RNDU);
  return r;
}

Interval cos(const Interval& x) { return periodic(x, mpfr_cos, Rational(0)); }

Interval sin(const Interval& x) { return periodic(x, mpfr_sin, Rational(1, 2)); }

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.hi()) < 0) throw DomainError("sqrt of a negative interval");
  Interval r = monotone_increasing(x, mpfr_sqrt);
  if (mpfr_sgn(x.lo()) < 0) mpfr_set_zero(r.lo_mut(), 1);
  return r;
}

Interval asin(const Interval& x) {
  if (mpfr_cmp_si(x.lo(), -1) < 0 || mpfr_cmp_si(x.hi(), 1) > 0)
    throw DomainError("arcsin argument outside [-1, 1]");
  return monotone_increasing(x, mpfr_asin);
}

Interval acos(const Interval& x) {
  if (mpfr_cmp_si(x.lo(), -1) < 0 || mpfr_cmp_si(x.hi(), 1) > 0)
    throw DomainError("arccos argument outside [-1, 1]");
  return monotone_decreasing(x, mpfr_acos);
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo()) <= 0) throw DomainError("log of a non-positive interval");
  return monotone_increasing(x, mpfr_log);
}

Interval exp(const Interval& x) { return monotone_increasing(x, mpfr_exp); }

Interval pow_half(const Interval& x, int twice) {
  if (mpfr_sgn(x.lo()) <= 0) throw DomainError("pow_half needs a positive base");
  if (twice % 2 == 0) return pow(x, twice / 2);
  return pow(sqrt(x), twice);
}

Interval enclose_elementary(Elementary f, const Interval& x, mpfr_prec_t prec) {
  Interval xp = x.with_precision(prec);
  switch (f) {
    case Elementary::sin: return sin(xp);
    case Elementary::cos: return cos(xp);
    case Elementary::sqrt: return sqrt(xp);
    case Elementary::arcsin: return asin(xp);
    case Elementary::arccos: return acos(xp);
    case Elementary::ln: return log(xp);
    case Elementary::exp: return exp(xp);
    case Elementary::pi: return pi_interval(prec);
  }
  throw std::invalid_argument("unknown elementary function");
}

Interval gamma_ratio(long k, int twice_s, mpfr_prec_t prec) {
  if (k < 1) throw DomainError("gamma_ratio needs k >= 1");
  if (twice_s < 0) throw DomainError("gamma_ratio needs s >= 0");
  if (twice_s % 2 == 0) {
    // Integer shift: 1/(k)_s exactly.
    Rational p = pochhammer(Rational(k), twice_s / 2);
    return Interval(Rational(1) / p, prec);
  }
  // Γ(k)/Γ(k+s) = Π_{i<k} 2i/(2i-1) / (√π Π_{j=k-1}^{K-1} (j+1/2)),  K = k+s-1/2.
  const long K = k + (twice_s - 1) / 2;
  Interval acc(Rational(1), prec);
  Rational chunk(1);
  int in_chunk = 0;
  auto flush = [&] {
    acc *= Interval(chunk, prec);
    chunk = 1;
    in_chunk = 0;
  };
  for (long i = 1; i < k; ++i) {
    chunk *= Rational(2 * i) / Rational(2 * i - 1);
    if (++in_chunk == 16) flush();
  }
  for (long j = k - 1; j <= K - 1; ++j) {
    chunk /= Rational(2 * j + 1, 2);
    if (++in_chunk == 16) flush();
  }
  flush();
  return acc / sqrt(pi_interval(prec));
}

}  // namespace qcv::numerics
