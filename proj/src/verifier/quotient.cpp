#include "qcv/verifier/quotient.hpp"

#include <stdexcept>

#include "qcv/orthopoly/gegenbauer.hpp"

namespace qcv::verifier {

using numerics::make_rational;
using orthopoly::lambda;

Rational b_coefficient(long n, long k, const Rational& alpha) {
  return make_rational(9, 32) * alpha * alpha *
         (Rational(lambda(n + 1) - lambda(k)) + make_rational(11, 7) / alpha) * (2 * k + 5);
}

Rational b_quotient(long n, long k, const Rational& alpha) {
  if (k < 0 || k > n) throw std::invalid_argument("b_quotient needs 0 <= k <= n");
  const Rational c = make_rational(11, 7) / alpha;
  const Rational num = Rational(n * n + 7 * n - 3 * k * k - 18 * k - 15) + c;
  const Rational den = Rational(k + 3) * (Rational(2 * n * n + 14 * n - 2 * k * k - 12 * k + 5) + 2 * c);
  return num / den;
}

Interval b_quotient(long n, long k, const Interval& alpha) {
  const Rational a = alpha.lo_rational(), b = alpha.hi_rational();
  const Rational qa = b_quotient(n, k, a), qb = b_quotient(n, k, b);
  return qa <= qb ? Interval(qa, qb, alpha.precision()) : Interval(qb, qa, alpha.precision());
}

}  // namespace qcv::verifier
