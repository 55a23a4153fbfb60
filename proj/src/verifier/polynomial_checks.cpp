#include "qcv/verifier/polynomial_checks.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "qcv/asymptotics/lower_bound.hpp"
#include "qcv/numerics/polynomial.hpp"
#include "qcv/orthopoly/gegenbauer.hpp"
#include "qcv/orthopoly/hypergeometric.hpp"

namespace qcv::verifier {

using numerics::make_rational;
using orthopoly::lambda;

namespace {

// The θ-grid engine evaluates in doubles with an a-priori error bound.
constexpr int kGridPrecision = 53;

std::string dec(const Rational& q) { return numerics::to_decimal_string(q, 10, numerics::Direction::nearest); }

void describe(Certificate& c, const orthopoly::CertifiedExtremum& e) {
  c.param("lo", dec(e.value_enclosure.lo_rational()))
      .param("hi", dec(e.value_enclosure.hi_rational()))
      .param("width", numerics::to_decimal_string(e.value_enclosure.hi_rational() - e.value_enclosure.lo_rational(),
                                                  4, numerics::Direction::up))
      .param("argmax_x", std::to_string(e.argmax_x))
      .param("grid_step", std::to_string(e.grid_step))
      .param("lipschitz_bound", dec(e.lipschitz_bound));
}

}  // namespace

Certificate cn_check(long n, const orthopoly::ExtremumOptions& options) {
  if (n < 1) throw std::invalid_argument("cn_check needs n >= 1");
  Certificate c;
  c.suite = "cn";
  c.check_id = "cn/n=" + std::to_string(n);
  c.index = n;
  c.mode = Mode::interval;
  c.precision_bits = kGridPrecision;
  c.param("n", std::to_string(n));
  const auto e = orthopoly::certified_max_abs_difference(static_cast<int>(n), Rational(0), Rational(1), options);
  describe(c, e);
  const Claim claim = n <= 29 ? Claim::le(make_rational(12, 100)) : Claim::lt(make_rational(26, 1000));
  settle(c, claim, Enclosure::of(e.value_enclosure));
  return c;
}

Certificate lemma_min_check(long k, const orthopoly::ExtremumOptions& options) {
  if (k > 200) return asymptotics::check_lower_bound_large_k(k);
  if (k < 1) throw std::invalid_argument("lemma_min_check needs k >= 1");
  Certificate c;
  c.suite = "lemma-min";
  c.check_id = "lemma-min/exact/k=" + std::to_string(k);
  c.index = k;
  c.mode = Mode::interval;
  c.precision_bits = kGridPrecision;
  c.param("k", std::to_string(k));
  const auto e = orthopoly::certified_min(static_cast<int>(k), Rational(0), Rational(1), options);
  describe(c, e);
  settle(c, Claim::ge(make_rational(-1, 25)), Enclosure::of(e.value_enclosure));
  return c;
}

Certificate pt_check(long k) {
  if (k < 2) throw std::invalid_argument("pt_check needs k >= 2");
  Certificate c;
  c.suite = "pointwise";
  c.check_id = "pointwise/pt/k=" + std::to_string(k);
  c.index = k;
  c.mode = Mode::exact;
  c.param("k", std::to_string(k));
  const Rational x = 1 - Rational(8) / Rational(lambda(k));
  const Claim claim = Claim::in(make_rational(3, 10), make_rational(33, 100));
  if (k <= 100) {
    c.param("method", "polynomial");
    settle(c, claim, Enclosure::point(numerics::eval_polynomial(orthopoly::f_tilde_prime(static_cast<int>(k)), x)));
    return c;
  }
  // F̃'_k = F_{k-1}^{7/2}; odd degree carries the factor x = cos θ.
  const int n = static_cast<int>(k - 1);
  const Rational t = 1 - x * x;
  const auto sums = orthopoly::hypergeometric_partial_sums(n, orthopoly::kNu72, t, 5, 6);
  c.param("method", "hypergeometric");
  if (!sums) {
    c.claimed = claim;
    c.verdict = Verdict::inconclusive;
    c.note("term ratios do not decrease past j = 5; sandwich unavailable");
    return c;
  }
  const Rational scale = n % 2 == 1 ? x : Rational(1);
  c.param("min_ratio", dec(sums->min_ratio)).param("t", dec(t));
  settle(c, claim, {scale * sums->lower, scale * sums->upper});
  return c;
}

Certificate pointwise_upper_check(long k, const orthopoly::ExtremumOptions& options) {
  if (k < 6) throw std::invalid_argument("pointwise_upper_check needs k >= 6");
  Certificate c;
  c.suite = "pointwise";
  c.check_id = "pointwise/flat/k=" + std::to_string(k);
  c.index = k;
  c.mode = Mode::interval;
  c.precision_bits = kGridPrecision;
  c.param("k", std::to_string(k));
  const Rational x_hi = 1 - Rational(8) / Rational(lambda(k));
  const auto e = orthopoly::certify_extremum(orthopoly::CosineSeries::gegenbauer(static_cast<int>(k - 1), orthopoly::kNu72),
                                             orthopoly::ExtremumKind::max, Rational(0), x_hi, options);
  describe(c, e);
  settle(c, Claim::le(make_rational(33, 100)), Enclosure::of(e.value_enclosure));
  c.note("maximum of F~'_k on [0, 1 - 8/lambda_k]");
  return c;
}

}  // namespace qcv::verifier
