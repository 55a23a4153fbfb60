#pragma once

#include <vector>

#include "qcv/numerics/interval.hpp"
#include "qcv/numerics/rational.hpp"

namespace qcv::numerics {

// Dense polynomial with exact rational coefficients, ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial monomial(int degree, const Rational& c = Rational(1));
  static Polynomial constant(const Rational& c) { return monomial(0, c); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(int i) const;

  Polynomial derivative() const;
  Polynomial reflected() const;  // p(-x)

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

Polynomial x_times(const Polynomial& p);

// Horner evaluation: exact for rationals, enclosure for intervals, plain
// rounding for doubles (screening only).
Rational eval_polynomial(const Polynomial& p, const Rational& x);
Interval eval_polynomial(const Polynomial& p, const Interval& x);
double eval_polynomial(const Polynomial& p, double x);

}  // namespace qcv::numerics
