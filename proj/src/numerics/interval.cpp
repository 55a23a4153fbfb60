#include "qcv/numerics/interval.hpp"

#include <algorithm>
#include <utility>

namespace qcv::numerics {

void Interval::init(mpfr_prec_t prec) {
  prec_ = prec;
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
}

Interval::Interval(mpfr_prec_t prec) {
  init(prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& q, mpfr_prec_t prec) {
  init(prec);
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
  if (lo > hi) throw std::invalid_argument("interval with lo > hi");
  init(prec);
  mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(long v, mpfr_prec_t prec) {
  init(prec);
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::~Interval() {
  if (prec_ != 0) {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }
}

Interval::Interval(const Interval& other) {
  init(other.prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  init(other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this == &other) return *this;
  if (prec_ != other.prec_) {
    mpfr_set_prec(lo_, other.prec_);
    mpfr_set_prec(hi_, other.prec_);
    prec_ = other.prec_;
  }
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  std::swap(prec_, other.prec_);
  return *this;
}

Interval Interval::from_doubles(double lo, double hi, mpfr_prec_t prec) {
  if (!(lo <= hi)) throw std::invalid_argument("interval with lo > hi");
  Interval r(std::max<mpfr_prec_t>(prec, 53));
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

Rational Interval::lo_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

Rational Interval::hi_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

double Interval::mid_double() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& other) const {
  return mpfr_lessequal_p(lo_, other.lo_) && mpfr_greaterequal_p(hi_, other.hi_);
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::intersects(const Interval& other) const {
  return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

Interval Interval::width() const {
  Interval r(prec_);
  mpfr_sub(r.lo_, hi_, lo_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::mid() const {
  Interval r(prec_);
  mpfr_add(r.lo_, lo_, hi_, MPFR_RNDD);
  mpfr_add(r.hi_, lo_, hi_, MPFR_RNDU);
  mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDD);
  mpfr_div_2ui(r.hi_, r.hi_, 1, MPFR_RNDU);
  return r;
}

bool Interval::certainly_less(const Rational& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0; }
bool Interval::certainly_greater(const Rational& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0; }
bool Interval::certainly_less_equal(const Rational& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0; }
bool Interval::certainly_greater_equal(const Rational& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) >= 0; }

Interval Interval::with_precision(mpfr_prec_t prec) const {
  Interval r(prec);
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval& Interval::operator+=(const Interval& o) { return *this = *this + o; }
Interval& Interval::operator-=(const Interval& o) { return *this = *this - o; }
Interval& Interval::operator*=(const Interval& o) { return *this = *this * o; }
Interval& Interval::operator/=(const Interval& o) { return *this = *this / o; }

std::string Interval::to_string(int digits) const {
  return "[" + to_decimal_string(lo_rational(), digits, Direction::down) + ", " +
         to_decimal_string(hi_rational(), digits, Direction::up) + "]";
}

namespace {

mpfr_prec_t joint(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Min/max over the four endpoint combinations, each rounded outward.
Interval corners(const Interval& a, const Interval& b, BinaryOp op) {
  Interval r(joint(a, b));
  mpfr_t t;
  mpfr_init2(t, r.precision());
  const mpfr_srcptr as[2] = {a.lo(), a.hi()};
  const mpfr_srcptr bs[2] = {b.lo(), b.hi()};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      op(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo())) mpfr_set(r.lo_mut(), t, MPFR_RNDD);
      op(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi())) mpfr_set(r.hi_mut(), t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_add(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_sub(r.lo_mut(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(r.hi_mut(), a.hi(), b.lo(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) { return corners(a, b, mpfr_mul); }

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  return corners(a, b, mpfr_div);
}

Interval operator-(const Interval& a) {
  Interval r(a.precision());
  mpfr_neg(r.lo_mut(), a.hi(), MPFR_RNDD);
  mpfr_neg(r.hi_mut(), a.lo(), MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Rational& b) { return a + Interval(b, a.precision()); }
Interval operator-(const Interval& a, const Rational& b) { return a - Interval(b, a.precision()); }
Interval operator*(const Interval& a, const Rational& b) { return a * Interval(b, a.precision()); }
Interval operator/(const Interval& a, const Rational& b) { return a / Interval(b, a.precision()); }
Interval operator+(const Rational& a, const Interval& b) { return Interval(a, b.precision()) + b; }
Interval operator-(const Rational& a, const Interval& b) { return Interval(a, b.precision()) - b; }
Interval operator*(const Rational& a, const Interval& b) { return Interval(a, b.precision()) * b; }
Interval operator/(const Rational& a, const Interval& b) { return Interval(a, b.precision()) / b; }

Interval interval_from_rational(const Rational& q, mpfr_prec_t prec) { return Interval(q, prec); }

Interval hull(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_min(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval abs(const Interval& a) {
  if (mpfr_sgn(a.lo()) >= 0) return a;
  if (mpfr_sgn(a.hi()) <= 0) return -a;
  Interval r(a.precision());
  mpfr_set_zero(r.lo_mut(), 1);
  mpfr_t t;
  mpfr_init2(t, a.precision());
  mpfr_neg(t, a.lo(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), t, a.hi(), MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval pow(const Interval& a, int n) {
  if (n < 0) return Interval(Rational(1), a.precision()) / pow(a, -n);
  if (n == 0) return Interval(Rational(1), a.precision());
  Interval r(a.precision());
  auto un = static_cast<unsigned long>(n);
  if (n % 2 == 1) {
    mpfr_pow_ui(r.lo_mut(), a.lo(), un, MPFR_RNDD);
    mpfr_pow_ui(r.hi_mut(), a.hi(), un, MPFR_RNDU);
    return r;
  }
  Interval m = abs(a);
  mpfr_pow_ui(r.lo_mut(), m.lo(), un, MPFR_RNDD);
  mpfr_pow_ui(r.hi_mut(), m.hi(), un, MPFR_RNDU);
  return r;
}

Interval sqr(const Interval& a) { return pow(a, 2); }

Interval min(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_min(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(joint(a, b));
  mpfr_max(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

}  // namespace qcv::numerics
