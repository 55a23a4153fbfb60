#include "qcv/verifier/one_minus_x2.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qcv/numerics/elementary.hpp"
#include "qcv/orthopoly/extremum.hpp"
#include "qcv/orthopoly/gegenbauer.hpp"

namespace qcv::verifier {

using numerics::make_rational;
using numerics::pochhammer;

namespace {

std::string nu_text(HalfInteger nu) { return numerics::to_string(nu); }

Certificate om_cert(const std::string& id, long index, mpfr_prec_t prec) {
  Certificate c;
  c.suite = "one-minus-x2";
  c.check_id = "one-minus-x2/" + id;
  c.index = index;
  c.mode = Mode::interval;
  c.precision_bits = static_cast<int>(prec);
  return c;
}

}  // namespace

Interval c_tilde(HalfInteger nu, mpfr_prec_t prec) {
  const Rational v = nu.value();
  const Interval s = Interval(v + make_rational(1, 2), prec) - numerics::sqrt(Interval(v, prec));
  const bool small = v < 5;
  const Rational den = small ? Rational(make_rational(11, 2) * (v + make_rational(11, 2)))
                             : Rational((v + make_rational(1, 2)) * (2 * v + make_rational(1, 2)));
  const Interval r = s / den;
  Interval sum(Rational(0), prec);
  Interval power(Rational(1), prec);
  for (int k = 0; k <= 4; ++k) {
    const Rational p = small ? Rational(pochhammer(Rational(6 - k), k) * pochhammer(6 + v, k))
                             : Rational(pochhammer(v - k + 1, k) * pochhammer(2 * v + 1, k));
    Rational coef = p / (Rational(numerics::factorial(k)) * pochhammer(v + make_rational(1, 2), k));
    if (k % 2 == 1) coef = -coef;
    sum += power * coef;
    power *= r;
  }
  return sum * (4 * v + 2);
}

Certificate check_c_tilde(HalfInteger nu, mpfr_prec_t prec) {
  Rational claim;
  if (nu == orthopoly::kNu72)
    claim = make_rational(919, 100);
  else if (nu == orthopoly::kNu92)
    claim = make_rational(1102, 100);
  else
    throw std::invalid_argument("check_c_tilde has printed bounds only for nu = 7/2, 9/2");
  Certificate c = om_cert("c-tilde/nu=" + nu_text(nu), 0, prec);
  c.param("nu", nu_text(nu));
  settle(c, Claim::le(claim), Enclosure::of(c_tilde(nu, prec)));
  return c;
}

Certificate check_one_minus_x2_bound(int n, HalfInteger nu, mpfr_prec_t prec) {
  const Rational v = nu.value();
  if (Rational(n) < std::max(Rational(2 * v + 2), Rational(12)))
    throw std::invalid_argument("one-minus-x2 bound needs n >= max(2 nu + 2, 12)");
  const auto series = orthopoly::CosineSeries::gegenbauer(n, nu).times_one_minus_x2();
  const auto ext = orthopoly::certify_extremum(series, orthopoly::ExtremumKind::max_abs, Rational(0), Rational(1));
  const Interval rhs = c_tilde(nu, prec) / (Rational(n) * (n + 2 * v));

  Certificate c = om_cert("lemma/n=" + std::to_string(n) + ",nu=" + nu_text(nu), n, prec);
  c.param("n", std::to_string(n))
      .param("nu", nu_text(nu))
      .param("grid_step", std::to_string(ext.grid_step))
      .param("lipschitz_bound", numerics::to_fraction_string(ext.lipschitz_bound));
  // The right side is irrational; its lower endpoint is the claimed value,
  // which keeps Pass sound.
  settle(c, Claim::le(rhs.lo_rational()), Enclosure::of(ext.value_enclosure));
  c.note("C_tilde/(n(n+2nu)) in " + rhs.to_string(12));
  return c;
}

std::vector<Certificate> tail_bound_certificates(mpfr_prec_t prec) {
  const Interval c72 = c_tilde(orthopoly::kNu72, prec);
  const Interval c92 = c_tilde(orthopoly::kNu92, prec);
  const Rational bound = make_rational(26, 1000);
  std::vector<Certificate> out;
  {
    const long n = 429;
    Certificate c = om_cert("tail/n=429", n, prec);
    c.param("n", "429");
    settle(c, Claim::lt(bound), Enclosure::of((c72 / Rational(n + 8) + c92) / Rational(n)));
    c.note("(1/n)(C72/(n+8) + C92)");
    out.push_back(std::move(c));
  }
  {
    // c_429 = c_428^{7/2}: the difference bound at index 428 with ν = 7/2.
    const long m = 428;
    Certificate c = om_cert("tail/shifted/n=429", 429, prec);
    c.param("n", "429").param("index", "428");
    settle(c, Claim::lt(bound), Enclosure::of((c72 / Rational(m + 8) + c92) / Rational(m)));
    c.note("(1/428)(C72/436 + C92)");
    out.push_back(std::move(c));
  }
  {
    // 11.1/(n-1) dominates the shifted bound for every n > 428 and is
    // decreasing, so n = 429 is the binding case.
    const long n = 429;
    Certificate c = om_cert("tail/11.1/n=429", n, prec);
    c.param("n", "429");
    const Interval shifted = (c72 / Rational(n - 1 + 8) + c92) / Rational(n - 1);
    settle(c, Claim::lt(bound), Enclosure::point(make_rational(111, 10) / (n - 1)));
    if (!shifted.certainly_less_equal(make_rational(111, 10) / (n - 1))) c.verdict = Verdict::fail;
    c.note("11.1/(n-1), which bounds (1/(n-1))(C72/(n+7) + C92) = " + shifted.to_string(10));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace qcv::verifier
