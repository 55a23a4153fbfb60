#include "qcv/asymptotics/theta_window.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcv/numerics/elementary.hpp"
#include "qcv/orthopoly/gegenbauer.hpp"

namespace qcv::asymptotics {

using numerics::make_rational;
using numerics::Rational;

Interval delta(HalfInteger nu, mpfr_prec_t prec) {
  const Rational v = nu.value();
  const Interval root = numerics::sqrt(Interval(v, prec));
  return (v + make_rational(1, 2) - root) / (v + make_rational(1, 2));
}

Interval v_prime(int n, HalfInteger nu, const Interval& theta) {
  const Rational v = nu.value();
  const Interval c = numerics::cos(theta), s = numerics::sin(theta);
  const auto fn = orthopoly::normalized_gegenbauer(n, nu);
  const auto fm = orthopoly::normalized_gegenbauer(n - 1, HalfInteger(nu.twice + 2));
  const Rational factor = Rational(n) * (n + 2 * v) / (2 * v + 1);
  return s * (c * eval_polynomial(fn, c) * Rational(2) - sqr(s) * eval_polynomial(fm, c) * factor);
}

verifier::Certificate theta_window_samples(int n, HalfInteger nu) {
  const Rational v = nu.value();
  if (Rational(n) < std::max(Rational(2 * v + 2), Rational(12))) throw std::invalid_argument("n too small for theta window");
  // Horner at high degree loses about n bits near x = 1.
  const mpfr_prec_t prec = std::max<mpfr_prec_t>(128, 4 * n);
  const Rational s2 = (4 * v + 2) / (Rational(n) * (n + 2 * v));
  const Interval theta_bar = numerics::asin(numerics::sqrt(Interval(s2, prec)));
  const Interval theta_low =
      numerics::asin(numerics::sqrt(delta(nu, prec) * s2)) * (Rational(1) - make_rational(1, 1000));
  const Interval at_bar = v_prime(n, nu, theta_bar);
  const Interval at_low = v_prime(n, nu, theta_low);

  verifier::Certificate cert;
  cert.suite = "one-minus-x2";
  cert.check_id = "one-minus-x2/theta-window/n=" + std::to_string(n) + ",nu=" + numerics::to_string(nu);
  cert.index = n;
  cert.mode = verifier::Mode::interval;
  cert.precision_bits = static_cast<int>(prec);
  cert.param("n", std::to_string(n)).param("nu", numerics::to_string(nu));
  // Both signs folded into one quantity: min(-v'(θ̄), v'(θ̲(1-10⁻³))) > 0.
  const Interval combined = numerics::min(-at_bar, at_low);
  settle(cert, verifier::Claim::gt(Rational(0)), verifier::Enclosure::of(combined));
  cert.note("v'(theta_bar) in " + at_bar.to_string(8) + ", v'(theta_low) in " + at_low.to_string(8));
  return cert;
}

}  // namespace qcv::asymptotics
