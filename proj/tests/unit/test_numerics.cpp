#include <doctest.h>
#include <mpfr.h>

#include <random>

#include "qcv/numerics/elementary.hpp"
#include "qcv/numerics/interval.hpp"
#include "qcv/numerics/minimize.hpp"
#include "qcv/numerics/polynomial.hpp"
#include "qcv/numerics/rational.hpp"

using namespace qcv::numerics;

namespace {

// High-precision MPFR value of a unary function, used as an independent oracle.
struct Oracle {
  mpfr_t v;
  explicit Oracle(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const Rational& x) {
    mpfr_init2(v, 2000);
    mpfr_t in;
    mpfr_init2(in, 2000);
    mpfr_set_q(in, x.get_mpq_t(), MPFR_RNDN);
    fn(v, in, MPFR_RNDN);
    mpfr_clear(in);
  }
  ~Oracle() { mpfr_clear(v); }
  bool inside(const Interval& I) const { return mpfr_cmp(I.lo(), v) <= 0 && mpfr_cmp(v, I.hi()) <= 0; }
};

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 9999);
  return make_rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("22/7") == make_rational(22, 7));
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(parse_rational("0.191") == make_rational(191, 1000));
  CHECK(parse_rational("-1.5e-3") == make_rational(-3, 2000));
  CHECK(parse_rational("17") == Rational(17));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(to_fraction_string(make_rational(10, 4)) == "5/2");

  const Rational third = make_rational(1, 3);
  const Rational lo = parse_rational(to_decimal_string(third, 30, Direction::down));
  const Rational hi = parse_rational(to_decimal_string(third, 30, Direction::up));
  CHECK(lo < third);
  CHECK(third < hi);
  CHECK(hi - lo < Rational(1, 1000000) * Rational(1, 1000000) * Rational(1, 1000000) * Rational(1, 100000000));
  CHECK(to_decimal_string(Rational(-5, 4), 10, Direction::nearest) == "-1.25");
}

TEST_CASE("pochhammer and factorial") {
  CHECK(factorial(10) == 3628800);
  CHECK(pochhammer(make_rational(7, 2), 3) == make_rational(7 * 9 * 11, 8));
  CHECK(pochhammer(Rational(5), 0) == 1);
}

TEST_CASE("half integers") {
  CHECK(HalfInteger(7).value() == make_rational(7, 2));
  CHECK(HalfInteger::from_integer(3).is_integer());
  CHECK_THROWS_AS(HalfInteger(0), std::invalid_argument);
  CHECK(to_string(HalfInteger(9)) == "9/2");
}

TEST_CASE("interval arithmetic contains exact rational results") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 10000; ++i) {
    const Rational a = random_rational(rng), b = random_rational(rng);
    const Interval A(a, 64), B(b, 64);
    CHECK((A + B).contains(a + b));
    CHECK((A - B).contains(a - b));
    CHECK((A * B).contains(a * b));
    if (sgn(b) != 0) CHECK((A / B).contains(a / b));
    CHECK(sqr(A).contains(a * a));
    CHECK(pow(A, 3).contains(a * a * a));
  }
}

TEST_CASE("interval basics") {
  const Interval x(make_rational(22, 7), kDefaultPrecision);
  CHECK(x.contains(make_rational(22, 7)));
  CHECK(!x.is_point());
  CHECK(x.certainly_greater(Rational(3)));
  CHECK(x.certainly_less(make_rational(315, 100)));
  CHECK_THROWS_AS(Interval(Rational(1), kDefaultPrecision) / Interval(Rational(-1), Rational(1), kDefaultPrecision),
                  DomainError);
  const Interval wide(Rational(-2), Rational(3), kDefaultPrecision);
  CHECK(sqr(wide).lo_rational() == 0);
  CHECK(sqr(wide).hi_rational() == 9);
  CHECK(abs(wide).lo_rational() == 0);
  CHECK(hull(x, wide).contains(make_rational(22, 7)));
}

TEST_CASE("elementary enclosures match a 2000-bit oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(1, 400000);
  for (int i = 0; i < 2000; ++i) {
    const Rational x = make_rational(num(rng), 100000);  // (0, 4]
    const Interval X(x, kDefaultPrecision);
    CHECK(Oracle(mpfr_sin, x).inside(sin(X)));
    CHECK(Oracle(mpfr_cos, x).inside(cos(X)));
    CHECK(Oracle(mpfr_sqrt, x).inside(sqrt(X)));
    CHECK(Oracle(mpfr_log, x).inside(log(X)));
    CHECK(Oracle(mpfr_exp, x).inside(exp(X)));
    const Rational y = x / 4 - make_rational(1, 2);  // within [-1/2, 1/2]
    CHECK(Oracle(mpfr_asin, y).inside(asin(Interval(y, kDefaultPrecision))));
    CHECK(Oracle(mpfr_acos, y).inside(acos(Interval(y, kDefaultPrecision))));
  }
}

TEST_CASE("periodic functions over wide intervals") {
  const Interval s = sin(Interval(Rational(0), Rational(0), kDefaultPrecision));
  CHECK(s.lo_rational() == 0);
  CHECK(s.hi_rational() == 0);
  const Interval c = cos(Interval(Rational(3), Rational(4), kDefaultPrecision));
  CHECK(c.lo_rational() == -1);  // contains π
  const Interval full = sin(Interval(Rational(0), Rational(7), kDefaultPrecision));
  CHECK(full.lo_rational() == -1);
  CHECK(full.hi_rational() == 1);
  CHECK_THROWS_AS(sqrt(Interval(Rational(-2), Rational(-1), kDefaultPrecision)), DomainError);
  CHECK_THROWS_AS(log(Interval(Rational(0), Rational(1), kDefaultPrecision)), DomainError);
  CHECK_THROWS_AS(acos(Interval(Rational(2), kDefaultPrecision)), DomainError);
}

TEST_CASE("gamma ratio against mpfr_gamma") {
  for (long k : {1L, 2L, 10L, 57L, 300L}) {
    for (int twice_s : {0, 1, 7, 8, 13, 15}) {
      mpfr_t a, b, r;
      mpfr_inits2(3000, a, b, r, static_cast<mpfr_ptr>(nullptr));
      mpfr_set_si(a, k, MPFR_RNDN);
      mpfr_gamma(a, a, MPFR_RNDN);
      mpfr_set_si(b, 2 * k + twice_s, MPFR_RNDN);
      mpfr_div_2ui(b, b, 1, MPFR_RNDN);
      mpfr_gamma(b, b, MPFR_RNDN);
      mpfr_div(r, a, b, MPFR_RNDN);
      const Interval g = gamma_ratio(k, twice_s, kDefaultPrecision);
      CHECK(mpfr_cmp(g.lo(), r) <= 0);
      CHECK(mpfr_cmp(r, g.hi()) <= 0);
      CHECK(g.width().hi_double() < 1e-30 * g.hi_double());
      mpfr_clears(a, b, r, static_cast<mpfr_ptr>(nullptr));
    }
  }
}

TEST_CASE("pow_half") {
  const Interval v = pow_half(Interval(Rational(4), kDefaultPrecision), 3);
  CHECK(v.contains(Rational(8)));
}

TEST_CASE("polynomial operations") {
  const Polynomial p({Rational(1), Rational(-2), Rational(1)});  // (x-1)²
  CHECK(p.degree() == 2);
  CHECK(p.derivative() == Polynomial({Rational(-2), Rational(2)}));
  CHECK(p.reflected() == Polynomial({Rational(1), Rational(2), Rational(1)}));
  CHECK(eval_polynomial(p, make_rational(3, 2)) == make_rational(1, 4));
  CHECK(eval_polynomial(p, Interval(make_rational(1, 3), kDefaultPrecision)).contains(make_rational(4, 9)));
  CHECK((p - p).is_zero());
  CHECK((p * p).degree() == 4);
  CHECK(x_times(p).coefficient(3) == 1);
}

TEST_CASE("bisection bound search") {
  const IntervalFunction f = [](const Interval& x) { return sqr(x - Rational(1)); };
  auto ok = certify_lower_bound(f, Rational(0), Rational(3), make_rational(-1, 1000), kDefaultPrecision);
  CHECK(ok.outcome == BoundOutcome::holds);
  CHECK(ok.extremum_lo >= make_rational(-1, 1000));
  auto bad = certify_lower_bound(f, Rational(0), Rational(3), make_rational(1, 10), kDefaultPrecision);
  CHECK(bad.outcome == BoundOutcome::violated);
  CHECK(eval_polynomial(Polynomial({Rational(1), Rational(-2), Rational(1)}), bad.witness) < make_rational(1, 10));
  auto up = certify_upper_bound(f, Rational(0), Rational(3), Rational(3), kDefaultPrecision);
  CHECK(up.outcome == BoundOutcome::violated);
  auto up2 = certify_upper_bound(f, Rational(0), Rational(3), Rational(4), kDefaultPrecision);
  CHECK(up2.outcome == BoundOutcome::holds);
}
