#include <doctest.h>
#include <mpfr.h>

#include <cmath>
#include <random>

#include "qcv/asymptotics/expansion.hpp"
#include "qcv/asymptotics/lower_bound.hpp"
#include "qcv/asymptotics/theta_window.hpp"
#include "qcv/numerics/elementary.hpp"
#include "qcv/orthopoly/extremum.hpp"
#include "qcv/orthopoly/gegenbauer.hpp"

using namespace qcv;
using namespace qcv::asymptotics;
using numerics::Interval;
using numerics::make_rational;
using numerics::Rational;

namespace {

// F̃'_k(cos ζ) by exact-coefficient Horner at 3000 bits, ζ given as a double.
double exact_f_tilde(long k, double zeta) {
  const auto p = orthopoly::f_tilde_prime(static_cast<int>(k));
  mpfr_t c, acc, coef;
  mpfr_inits2(3000, c, acc, coef, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(c, zeta, MPFR_RNDN);
  mpfr_cos(c, c, MPFR_RNDN);
  mpfr_set_ui(acc, 0, MPFR_RNDN);
  const auto& cs = p.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    mpfr_mul(acc, acc, c, MPFR_RNDN);
    mpfr_set_q(coef, it->get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc, acc, coef, MPFR_RNDN);
  }
  const double r = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(c, acc, coef, static_cast<mpfr_ptr>(nullptr));
  return r;
}

}  // namespace

TEST_CASE("t coefficients") {
  CHECK(t_coeff(0) == 1);
  CHECK(t_coeff(1) == make_rational(35, 8));
  CHECK(t_coeff(2) == make_rational(945, 128));
  CHECK(t_coeff(3) == make_rational(3465, 1024));
  CHECK(t_coeff(4) == make_rational(-45045, 32768));
  // The μ = 2 family: E_0 numerator magnitudes are 1, 15/8, 105/128, 315/1024.
  CHECK(t_coeff(1, Rational(2)) == make_rational(15, 8));
  CHECK(t_coeff(2, Rational(2)) == make_rational(105, 128));
  CHECK(abs(t_coeff(3, Rational(2))) == make_rational(315, 1024));
}

TEST_CASE("expansion encloses the exact polynomial") {
  std::mt19937_64 rng(314);
  std::uniform_real_distribution<double> dist(M_PI / 8, 3 * M_PI / 8);
  for (long k : {150L, 201L, 250L, 300L, 428L}) {
    const AsymptoticExpansion e(k);
    for (int i = 0; i < 20; ++i) {
      const double zeta = dist(rng);
      const Interval z = Interval::from_doubles(zeta, zeta, numerics::kDefaultPrecision);
      const double exact = exact_f_tilde(k, zeta);
      const Interval enc = e.f_tilde_prime(z);
      CHECK(enc.lo_double() <= exact);
      CHECK(exact <= enc.hi_double());
      // Remainder validity: the N-term sum misses the exact value by at most the bound.
      const double partial = (e.prefactor() * e.partial_sum(z)).mid_double();
      const double rem = (e.prefactor() * e.remainder(z).bound).hi_double();
      CHECK(std::fabs(exact - partial) <= rem * (1 + 1e-9) + 1e-15);
      // Width relative to the leading term.
      const auto terms = e.terms(z);
      const double lead = (e.prefactor() * terms[0].gamma_ratio / terms[0].sine_power).mid_double();
      CHECK(enc.width().hi_double() < 1e-3 * lead);
    }
  }
}

TEST_CASE("C-normalized enclosure") {
  const double zeta = 0.7;
  const Interval z = Interval::from_doubles(zeta, zeta, numerics::kDefaultPrecision);
  const Interval c = asymptotic_enclosure(201, z);
  const Interval f = AsymptoticExpansion(201).f_tilde_prime(z);
  Rational scale(1);
  for (long j = 0; j < 6; ++j) scale *= Rational(201 + j);
  CHECK((f * (scale / 720)).intersects(c));
  CHECK_THROWS_AS(AsymptoticExpansion(201).f_tilde_prime(Interval(Rational(0), numerics::kDefaultPrecision)),
                  numerics::DomainError);
}

TEST_CASE("E terms") {
  const Interval l(make_rational(80, 7), numerics::kDefaultPrecision);
  const auto e = e_terms(l, 1000);
  CHECK(e[4].contains(Rational(0)));
  // Bounds for l in [5, 6.5] at k = 201, checked on a fine cover.
  Rational min0(1), min1(1);
  for (int i = 0; i < 300; ++i) {
    const Interval cell(Rational(5) + make_rational(3 * i, 600), Rational(5) + make_rational(3 * (i + 1), 600),
                        numerics::kDefaultPrecision);
    const auto ei = e_terms(cell, 201);
    if (ei[0].lo_rational() < min0) min0 = ei[0].lo_rational();
    if (ei[1].lo_rational() < min1) min1 = ei[1].lo_rational();
  }
  CHECK(min0 >= make_rational(-2, 10000));
  CHECK(min1 >= make_rational(-25, 100000));
}

TEST_CASE("E terms do not expand the t(3) expression") {
  const auto cert = check_e_identity(1000, Rational(7));
  CHECK(cert.verdict == verifier::Verdict::fail);
}

TEST_CASE("large-k lower bound at k = 201 agrees with the exact minimum") {
  const auto cert = check_lower_bound_large_k(201);
  CHECK(cert.verdict == verifier::Verdict::pass);
  const auto exact = orthopoly::certified_min(201, Rational(0), Rational(1));
  CHECK(cert.computed.lo <= exact.value_enclosure.hi_rational());
  CHECK(exact.value_enclosure.lo_rational() <= cert.computed.hi);
}

TEST_CASE("theta window samples") {
  CHECK(theta_window_samples(13, orthopoly::kNu72).verdict == verifier::Verdict::pass);
  CHECK(theta_window_samples(20, orthopoly::kNu92).verdict == verifier::Verdict::pass);
  const Interval d = delta(orthopoly::kNu72);
  const double expected = (3.5 - std::sqrt(3.5) + 0.5) / 4.0;
  CHECK(d.lo_double() <= expected + 1e-15);
  CHECK(expected - 1e-15 <= d.hi_double());
}

TEST_CASE("zeta - sin zeta <= (pi/2 - 1) sin^3 zeta on a grid") {
  for (int i = 1; i < 1000; ++i) {
    const Rational z = make_rational(i, 1000) * make_rational(157, 100);
    const Interval Z(z, numerics::kDefaultPrecision);
    const Interval s = numerics::sin(Z);
    const Interval lhs = Z - s;
    const Interval rhs = (numerics::pi_interval(numerics::kDefaultPrecision) / Rational(2) - Rational(1)) * pow(s, 3);
    CHECK(lhs.hi_double() <= rhs.lo_double());
  }
}
