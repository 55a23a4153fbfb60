#include "qcv/orthopoly/gegenbauer.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "qcv/numerics/elementary.hpp"

namespace qcv::orthopoly {

namespace {

constexpr int kMaxDegree = 4096;

class FamilyCache {
 public:
  Polynomial get(int k, HalfInteger nu) {
    std::lock_guard lock(mutex_);
    auto& fam = families_[nu.twice];
    const Rational v = nu.value();
    if (fam.empty()) {
      fam.push_back(Polynomial::constant(Rational(1)));
      fam.push_back(Polynomial::monomial(1));
    }
    while (static_cast<int>(fam.size()) <= k) {
      const int j = static_cast<int>(fam.size()) - 1;
      Polynomial next = x_times(fam[j]) * (2 * (Rational(j) + v));
      next -= fam[j - 1] * Rational(j);
      next *= Rational(1) / (Rational(j) + 2 * v);
      fam.push_back(std::move(next));
    }
    return fam[static_cast<size_t>(k)];
  }

 private:
  std::mutex mutex_;
  std::map<int, std::vector<Polynomial>> families_;
};

FamilyCache& cache() {
  static FamilyCache c;
  return c;
}

}  // namespace

Polynomial normalized_gegenbauer(int k, HalfInteger nu) {
  if (k < 0 || k > kMaxDegree) throw std::invalid_argument("degree out of range");
  return cache().get(k, nu);
}

Polynomial f_tilde_prime(int k) {
  if (k < 1) throw std::invalid_argument("f_tilde_prime needs k >= 1");
  return normalized_gegenbauer(k - 1, kNu72);
}

bool check_ode_identity(const Polynomial& p, int k, HalfInteger nu) {
  const Polynomial d1 = p.derivative();
  const Polynomial d2 = d1.derivative();
  const Polynomial one_minus_x2({Rational(1), Rational(0), Rational(-1)});
  const Rational two_nu_plus_1 = 2 * nu.value() + 1;
  Polynomial lhs = one_minus_x2 * d2;
  lhs -= x_times(d1) * two_nu_plus_1;
  lhs += p * (Rational(k) * (Rational(k) + 2 * nu.value()));
  return lhs.is_zero();
}

bool check_ode_identity(int k, HalfInteger nu) { return check_ode_identity(normalized_gegenbauer(k, nu), k, nu); }

bool check_derivative_identity(int k, HalfInteger nu, HalfInteger mu) {
  if (k < 1) throw std::invalid_argument("derivative identity needs k >= 1");
  const Rational v = nu.value();
  const Rational factor = Rational(k) * (Rational(k) + 2 * v) / (2 * v + 1);
  return normalized_gegenbauer(k, nu).derivative() == normalized_gegenbauer(k - 1, mu) * factor;
}

bool check_derivative_identity(int k, HalfInteger nu) {
  return check_derivative_identity(k, nu, HalfInteger(nu.twice + 2));
}

Rational weighted_inner_product(int k, int l) {
  const Polynomial weight({Rational(1), Rational(0), Rational(-2), Rational(0), Rational(1)});
  const Polynomial integrand = weight * normalized_gegenbauer(k, kNu52) * normalized_gegenbauer(l, kNu52);
  // ∫_{-1}^{1} x^i dx = 2/(i+1) for even i, 0 for odd i.
  Rational total(0);
  const auto& c = integrand.coefficients();
  for (size_t i = 0; i < c.size(); i += 2) total += c[i] * Rational(2) / Rational(static_cast<long>(i) + 1);
  return total;
}

Rational orthogonality_constant(int k) {
  const long lk = lambda(k);
  return Rational(128) / Rational((2L * k + 5) * (lk + 4) * (lk + 6));
}

Interval largest_zero_upper_bound(int n, HalfInteger nu, mpfr_prec_t prec) {
  if (n < 2) throw std::invalid_argument("largest_zero_upper_bound needs n >= 2");
  const Rational v = nu.value();
  const Rational ratio = (Rational(n - 1) * (n + 2 * v - 2)) / ((n + v - 2) * (n + v - 1));
  const Interval angle = numerics::pi_interval(prec) / Rational(n + 1);
  return numerics::sqrt(Interval(ratio, prec)) * numerics::cos(angle);
}

}  // namespace qcv::orthopoly
