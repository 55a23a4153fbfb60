#pragma once

#include <vector>

#include "qcv/numerics/polynomial.hpp"
#include "qcv/numerics/rational.hpp"

namespace qcv::orthopoly {

using numerics::HalfInteger;
using numerics::Polynomial;
using numerics::Rational;

// f(θ) = Σ_m a_m cos(mθ) with exact rational coefficients. Polynomials in
// x = cos θ map to these via Chebyshev T_m, and Gegenbauer polynomials have
// a closed positive-weight expansion, so differences and products with
// (1-x²) stay exact.
class CosineSeries {
 public:
  CosineSeries() = default;
  explicit CosineSeries(std::vector<Rational> coefficients);

  // F_n^ν(cos θ) = Σ_j w_j cos((n-2j)θ),
  // w_j = (ν)_j (ν)_{n-j} / (j! (n-j)!) · n!/(2ν)_n.
  static CosineSeries gegenbauer(int n, HalfInteger nu);

  const std::vector<Rational>& coefficients() const { return a_; }
  int max_frequency() const { return static_cast<int>(a_.size()) - 1; }

  CosineSeries& operator+=(const CosineSeries& o);
  CosineSeries& operator-=(const CosineSeries& o);
  CosineSeries& operator*=(const Rational& s);
  // Adds c0 + c1 x.
  CosineSeries& add_linear(const Rational& c0, const Rational& c1);

  // Multiply by sin²θ = 1 - x².
  CosineSeries times_one_minus_x2() const;

  Rational abs_sum() const;       // Σ|a_m|, bounds |f|
  Rational first_moment() const;  // Σ|a_m| m, bounds |f'(θ)|
  Rational second_moment() const; // Σ|a_m| m², bounds |f''(θ)|

  Polynomial to_polynomial() const;
  Rational eval_exact_at_one() const;

  struct Enclosure {
    double lo;
    double hi;
  };

  // Rigorous enclosure of f(θ) for a double θ: cos θ is rounded to nearest
  // with MPFR, T_m follows the Chebyshev recurrence in doubles, and the
  // a-priori rounding bound 8u m² per frequency plus the summation bound
  // is added on both sides.
  Enclosure evaluate(double theta) const;
  double evaluate_fast(double theta) const;

 private:
  void refresh();

  std::vector<Rational> a_;
  std::vector<double> ad_;
  double error_weight_ = 0.0;
};

CosineSeries operator-(CosineSeries a, const CosineSeries& b);
CosineSeries operator+(CosineSeries a, const CosineSeries& b);

}  // namespace qcv::orthopoly
