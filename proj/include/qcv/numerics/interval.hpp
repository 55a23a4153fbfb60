#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "qcv/numerics/rational.hpp"

namespace qcv::numerics {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds lo
// toward -inf and hi toward +inf, so results contain the exact image.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = kDefaultPrecision);
  Interval(const Rational& q, mpfr_prec_t prec);
  Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
  Interval(long v, mpfr_prec_t prec);
  ~Interval();

  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;

  // Exact double endpoints (no widening).
  static Interval from_doubles(double lo, double hi, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }
  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  mpfr_t& lo_mut() { return lo_; }
  mpfr_t& hi_mut() { return hi_; }

  // Endpoints as exact dyadic rationals.
  Rational lo_rational() const;
  Rational hi_rational() const;
  // Doubles rounded outward.
  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_double() const;

  bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
  bool contains(const Rational& q) const;
  bool contains(const Interval& other) const;
  bool contains_zero() const;
  bool intersects(const Interval& other) const;

  Interval width() const;
  Interval mid() const;  // thin enclosure of the midpoint

  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
  bool certainly_less(const Rational& q) const;
  bool certainly_greater(const Rational& q) const;
  bool certainly_less_equal(const Rational& q) const;
  bool certainly_greater_equal(const Rational& q) const;

  Interval with_precision(mpfr_prec_t prec) const;

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

  std::string to_string(int digits = 20) const;

 private:
  void init(mpfr_prec_t prec);

  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);

Interval operator+(const Interval& a, const Rational& b);
Interval operator-(const Interval& a, const Rational& b);
Interval operator*(const Interval& a, const Rational& b);
Interval operator/(const Interval& a, const Rational& b);
Interval operator+(const Rational& a, const Interval& b);
Interval operator-(const Rational& a, const Interval& b);
Interval operator*(const Rational& a, const Interval& b);
Interval operator/(const Rational& a, const Interval& b);

Interval interval_from_rational(const Rational& q, mpfr_prec_t prec = kDefaultPrecision);
Interval hull(const Interval& a, const Interval& b);
Interval abs(const Interval& a);
Interval sqr(const Interval& a);
Interval pow(const Interval& a, int n);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);

}  // namespace qcv::numerics
