#include "qcv/orthopoly/cosine_series.hpp"

#include <mpfr.h>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qcv::orthopoly {

namespace {

constexpr double kUnit = std::numeric_limits<double>::epsilon() / 2;  // 2^-53

double cos_nearest(double theta) {
  mpfr_t t, c;
  mpfr_init2(t, 53);
  mpfr_init2(c, 53);
  mpfr_set_d(t, theta, MPFR_RNDN);
  mpfr_cos(c, t, MPFR_RNDN);
  const double r = mpfr_get_d(c, MPFR_RNDN);
  mpfr_clear(t);
  mpfr_clear(c);
  return r;
}

double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }
double down(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }

}  // namespace

CosineSeries::CosineSeries(std::vector<Rational> coefficients) : a_(std::move(coefficients)) { refresh(); }

void CosineSeries::refresh() {
  while (!a_.empty() && sgn(a_.back()) == 0) a_.pop_back();
  ad_.resize(a_.size());
  for (size_t m = 0; m < a_.size(); ++m) ad_[m] = a_[m].get_d();
  // Per-frequency recurrence error: the computed T̂_m differs from T_m(ĉ) by
  // at most 2.6u m² (|U_j| <= j+1, local error <= 5.01u), and T_m(ĉ) from
  // T_m(cos θ) by m²|ĉ - cos θ| <= m² u. 8u m² doubles that.
  // Coefficient conversion costs 2u|a_m|; recursive summation (M+1)u Σ|a_m|.
  const Rational s0 = abs_sum();
  const Rational s2 = second_moment();
  const double m = static_cast<double>(a_.size());
  error_weight_ = 8.0 * kUnit * s2.get_d() * (1 + 1e-12) + (m + 4.0) * 1.1 * kUnit * s0.get_d() * 1.02 +
                  m * std::numeric_limits<double>::min();
  error_weight_ = up(error_weight_ * 2);  // safety factor
}

CosineSeries CosineSeries::gegenbauer(int n, HalfInteger nu) {
  if (n < 0) throw std::invalid_argument("negative degree");
  const Rational v = nu.value();
  std::vector<Rational> a(static_cast<size_t>(n) + 1);
  // w_0 = (ν)_n/(2ν)_n; w_{j+1}/w_j = (ν+j)(n-j)/((j+1)(ν+n-j-1)).
  Rational w = numerics::pochhammer(v, n) / numerics::pochhammer(2 * v, n);
  for (int j = 0; j <= n; ++j) {
    a[static_cast<size_t>(std::abs(n - 2 * j))] += w;
    if (j < n) w *= ((v + j) * Rational(n - j)) / (Rational(j + 1) * (v + n - j - 1));
  }
  return CosineSeries(std::move(a));
}

CosineSeries& CosineSeries::operator+=(const CosineSeries& o) {
  if (o.a_.size() > a_.size()) a_.resize(o.a_.size());
  for (size_t i = 0; i < o.a_.size(); ++i) a_[i] += o.a_[i];
  refresh();
  return *this;
}

CosineSeries& CosineSeries::operator-=(const CosineSeries& o) {
  if (o.a_.size() > a_.size()) a_.resize(o.a_.size());
  for (size_t i = 0; i < o.a_.size(); ++i) a_[i] -= o.a_[i];
  refresh();
  return *this;
}

CosineSeries& CosineSeries::operator*=(const Rational& s) {
  for (auto& c : a_) c *= s;
  refresh();
  return *this;
}

CosineSeries& CosineSeries::add_linear(const Rational& c0, const Rational& c1) {
  if (a_.size() < 2) a_.resize(2);
  a_[0] += c0;
  a_[1] += c1;
  refresh();
  return *this;
}

CosineSeries CosineSeries::times_one_minus_x2() const {
  // sin²θ cos mθ = cos(mθ)/2 - (cos((m+2)θ) + cos((m-2)θ))/4, with
  // cos(-kθ) = cos(kθ).
  std::vector<Rational> r(a_.size() + 2);
  const Rational half(1, 2), quarter(1, 4);
  for (size_t m = 0; m < a_.size(); ++m) {
    const Rational& c = a_[m];
    if (sgn(c) == 0) continue;
    r[m] += c * half;
    r[m + 2] -= c * quarter;
    const long lower = static_cast<long>(m) - 2;
    r[static_cast<size_t>(std::labs(lower))] -= c * quarter;
  }
  return CosineSeries(std::move(r));
}

Rational CosineSeries::abs_sum() const {
  Rational s(0);
  for (const auto& c : a_) s += abs(c);
  return s;
}

Rational CosineSeries::first_moment() const {
  Rational s(0);
  for (size_t m = 1; m < a_.size(); ++m) s += abs(a_[m]) * static_cast<long>(m);
  return s;
}

Rational CosineSeries::second_moment() const {
  Rational s(0);
  for (size_t m = 1; m < a_.size(); ++m) s += abs(a_[m]) * static_cast<long>(m * m);
  return s;
}

Polynomial CosineSeries::to_polynomial() const {
  Polynomial result;
  Polynomial t_prev = Polynomial::constant(Rational(1));
  Polynomial t_cur = Polynomial::monomial(1);
  for (size_t m = 0; m < a_.size(); ++m) {
    const Polynomial& tm = m == 0 ? t_prev : t_cur;
    if (sgn(a_[m]) != 0) result += tm * a_[m];
    if (m >= 1) {
      Polynomial next = x_times(t_cur) * Rational(2) - t_prev;
      t_prev = std::move(t_cur);
      t_cur = std::move(next);
    }
  }
  return result;
}

Rational CosineSeries::eval_exact_at_one() const {
  Rational s(0);
  for (const auto& c : a_) s += c;
  return s;
}

double CosineSeries::evaluate_fast(double theta) const {
  if (ad_.empty()) return 0.0;
  const double c = std::cos(theta);
  double t_prev = 1.0, t_cur = c;
  double acc = ad_[0];
  for (size_t m = 1; m < ad_.size(); ++m) {
    acc += ad_[m] * t_cur;
    const double next = 2.0 * c * t_cur - t_prev;
    t_prev = t_cur;
    t_cur = next;
  }
  return acc;
}

CosineSeries::Enclosure CosineSeries::evaluate(double theta) const {
  if (ad_.empty()) return {0.0, 0.0};
  const double c = cos_nearest(theta);
  double t_prev = 1.0, t_cur = c;
  double acc = ad_[0];
  double peak = 1.0;
  for (size_t m = 1; m < ad_.size(); ++m) {
    acc += ad_[m] * t_cur;
    peak = std::max(peak, std::fabs(t_cur));
    const double next = 2.0 * c * t_cur - t_prev;
    t_prev = t_cur;
    t_cur = next;
  }
  // The bound assumes the computed T̂_m stay within 1.01 in magnitude.
  if (peak > 1.01) throw std::runtime_error("Chebyshev recurrence left its error model");
  return {down(acc - error_weight_), up(acc + error_weight_)};
}

CosineSeries operator-(CosineSeries a, const CosineSeries& b) { return a -= b; }
CosineSeries operator+(CosineSeries a, const CosineSeries& b) { return a += b; }

}  // namespace qcv::orthopoly
