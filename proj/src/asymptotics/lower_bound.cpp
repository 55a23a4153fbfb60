#include "qcv/asymptotics/lower_bound.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "qcv/numerics/elementary.hpp"
#include "qcv/orthopoly/gegenbauer.hpp"

namespace qcv::asymptotics {

using numerics::make_rational;
using verifier::Certificate;
using verifier::Verdict;

namespace {

Interval poly(const Interval& x, std::initializer_list<long> coeffs_high_to_low) {
  Interval acc(Rational(0), x.precision());
  for (long c : coeffs_high_to_low) acc = acc * x + Rational(c);
  return acc;
}

std::string fmt(const Rational& q) { return numerics::to_decimal_string(q, 12, numerics::Direction::nearest); }

}  // namespace

std::array<Interval, 5> e_terms(const Interval& l, long k) {
  const mpfr_prec_t p = l.precision();
  const Interval quarter_pi = numerics::pi_interval(p) / Rational(4);
  const Interval cp = numerics::cos(l + quarter_pi);
  const Interval cm = numerics::cos(l - quarter_pi);
  const Rational K(k);
  const Interval l2 = sqr(l), l3 = pow(l, 3);

  std::array<Interval, 5> e{Interval(p), Interval(p), Interval(p), Interval(p), Interval(p)};
  e[0] = (l3 * cp * Rational(1024) - l2 * cm * Rational(1920) - l * cp * Rational(840) - cm * Rational(315)) /
         (numerics::pow_half(l, 13) * Rational(1024));
  e[1] = (poly(l, {512, 1280, 700, -315}) - l2 * cp * Rational(2304) - l * cm * Rational(1920) + cp * Rational(770)) *
         Rational(-3) / (numerics::pow_half(l, 11) * (K * 512));
  e[2] = (poly(l, {-10368, 11520, -5775}) + l * cp * Rational(15296) + cm * Rational(64920)) /
         (numerics::pow_half(l, 9) * (K * K * 256));
  e[3] = (poly(l, {478, -2705, 0}) - l * cp * Rational(231) - cm * Rational(1980)) * Rational(-3) /
         (numerics::pow_half(l, 9) * (K * K * K * 8));
  e[4] = poly(l, {-7, 80}) * Rational(297) / (numerics::pow_half(l, 7) * (K * K * K * K * 8));
  return e;
}

Interval e_source_expression(const Interval& l, long k) {
  const mpfr_prec_t p = l.precision();
  const Interval half_pi = numerics::pi_interval(p) / Rational(2);
  const Rational K(k);
  Interval sum(Rational(0), p);
  for (int m = 0; m < 4; ++m) {
    Rational coef = t_coeff(m) * numerics::pochhammer(K + make_rational(7 + 2 * m, 2), 3 - m);
    for (int i = 0; i < 3 - m; ++i) coef /= K;
    const Interval phase = numerics::cos(l - half_pi * make_rational(7 - 2 * m, 2));
    const Interval bracket = phase - l * (Rational(3 + m) / K);
    sum += bracket * coef / numerics::pow_half(l, 2 * m + 7);
  }
  return sum * (Rational(1) - Rational(16) / K);
}

Interval e_route_remainder(const Interval& l, long k, const Interval& gamma_ratio_15_2) {
  const mpfr_prec_t p = l.precision();
  const Rational K(k);
  const Rational t4 = abs(t_coeff(4));
  const Interval ratio = Rational(K) / l;  // k/l
  const Interval frac2 = sqr(l) / (K * K);  // l²/k²
  auto near = [&] {
    return gamma_ratio_15_2 * t4 * numerics::pow_half(ratio, 15) / numerics::sqrt(Rational(1) - frac2);
  };
  auto far = [&] { return gamma_ratio_15_2 * (t4 * 2) * numerics::pow_half(ratio, 13); };
  const Rational half(1, 2);
  if (frac2.certainly_less_equal(half)) return near();
  if (frac2.certainly_greater(half)) return far();
  // Straddling k/√2: both branches are valid upper bounds on their side.
  Interval n(p);
  try {
    n = near();
  } catch (const numerics::DomainError&) {
    return far();
  }
  return numerics::max(n, far());
}

CellSearchResult search_l_range(const std::function<Interval(const Interval&)>& f, double l_lo, double l_hi,
                                const Rational& threshold, mpfr_prec_t prec, int max_depth) {
  struct Cell {
    double a, b;
    int depth;
  };
  CellSearchResult out;
  std::optional<Rational> lower, upper;
  double worst = l_lo;

  std::vector<Cell> stack;
  {
    std::vector<Cell> initial;
    double a = l_lo;
    while (a < l_hi) {
      double b = a * 1.05;
      if (b >= l_hi || l_hi - b < 1e-9 * l_hi) b = l_hi;
      initial.push_back({a, b, 0});
      a = b;
    }
    stack.assign(initial.rbegin(), initial.rend());
  }

  auto eval = [&](double a, double b) -> std::optional<Interval> {
    ++out.cells;
    try {
      return f(Interval::from_doubles(a, b, prec));
    } catch (const numerics::DomainError&) {
      return std::nullopt;
    }
  };
  auto record = [&](const Interval& v, double at) {
    const Rational lo = v.lo_rational(), hi = v.hi_rational();
    if (!lower || lo < *lower) {
      lower = lo;
      worst = at;
    }
    if (!upper || hi < *upper) upper = hi;
  };

  bool unresolved = false;
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    const auto v = eval(c.a, c.b);
    if (v && v->certainly_greater_equal(threshold)) {
      record(*v, c.a);
      continue;
    }
    const double mid = 0.5 * (c.a + c.b);
    if (const auto pv = eval(mid, mid); pv && pv->certainly_less(threshold)) {
      record(*pv, mid);
      out.verdict = Verdict::fail;
      out.lower = *lower;
      out.upper = *upper;
      out.worst_l = mid;
      return out;
    }
    if (c.depth >= max_depth || !(mid > c.a && mid < c.b)) {
      unresolved = true;
      if (v) record(*v, c.a);
      continue;
    }
    stack.push_back({mid, c.b, c.depth + 1});
    stack.push_back({c.a, mid, c.depth + 1});
  }
  out.verdict = unresolved ? Verdict::inconclusive : Verdict::pass;
  out.lower = lower.value_or(threshold);
  out.upper = upper.value_or(threshold);
  out.worst_l = worst;
  return out;
}

double l_min_for(long k, mpfr_prec_t prec) {
  const Interval b = orthopoly::largest_zero_upper_bound(static_cast<int>(k - 2), orthopoly::kNu92, prec);
  const Interval b_hi(b.hi_rational(), prec);
  const Interval l = numerics::sqrt(Rational(1) - sqr(b_hi)) * Rational(k);
  return l.lo_double();
}

CellSearchResult e_route(long k, mpfr_prec_t prec) {
  const Interval gamma = numerics::gamma_ratio(k, 15, prec);
  const AsymptoticExpansion scale(k, 4, prec);
  const Interval pref = scale.prefactor();
  const Interval zero(Rational(0), prec);
  auto f = [&](const Interval& l) {
    const auto e = e_terms(l, k);
    Interval sum = e[0] + e[1] + e[2] + e[3] + e[4];
    const Interval r = e_route_remainder(l, k, gamma);
    return pref * (numerics::min(sum, zero) - Interval(r.hi_rational(), prec));
  };
  return search_l_range(f, l_min_for(k, prec), static_cast<double>(k), make_rational(-1, 25), prec);
}

CellSearchResult direct_route(long k, mpfr_prec_t prec) {
  const AsymptoticExpansion expansion(k, 4, prec);
  const Rational K(k);
  auto f = [&](const Interval& l) {
    Interval s = l / K;
    // l = k exactly maps to sin ζ = 1; clip rounding excursions above it.
    if (mpfr_cmp_ui(s.hi(), 1) > 0) s = Interval(s.lo_rational(), Rational(1), prec);
    return expansion.f_tilde_prime(numerics::asin(s));
  };
  return search_l_range(f, l_min_for(k, prec), static_cast<double>(k), make_rational(-1, 25), prec);
}

Certificate check_lower_bound_large_k(long k, mpfr_prec_t prec) {
  if (k <= 200) throw std::invalid_argument("check_lower_bound_large_k needs k > 200");
  Certificate cert;
  cert.suite = "lemma-min";
  cert.check_id = "lemma-min/asymptotic/k=" + std::to_string(k);
  cert.index = k;
  cert.mode = verifier::Mode::interval;
  cert.precision_bits = static_cast<int>(prec);
  cert.param("k", std::to_string(k)).param("N", "4");

  const double lmin = l_min_for(k, prec);
  const CellSearchResult direct = direct_route(k, prec);
  const CellSearchResult eroute = e_route(k, prec);
  cert.param("l_min", numerics::to_decimal_string(numerics::Rational(lmin), 10, numerics::Direction::down));
  settle(cert, verifier::Claim::ge(make_rational(-1, 25)), {direct.lower, direct.upper});
  cert.verdict = verifier::combine(cert.verdict, direct.verdict);
  cert.verdict = verifier::combine(cert.verdict, eroute.verdict);
  cert.note("direct expansion route: " + verifier::to_string(direct.verdict) + ", lower bound " + fmt(direct.lower) +
            " near l = " + std::to_string(direct.worst_l) + " over " + std::to_string(direct.cells) + " cells");
  cert.note("E-term route: " + verifier::to_string(eroute.verdict) + ", lower bound " + fmt(eroute.lower) +
            " near l = " + std::to_string(eroute.worst_l));
  return cert;
}

Certificate check_e_identity(long k, const Rational& l, mpfr_prec_t prec) {
  Certificate cert;
  cert.suite = "lemma-min";
  cert.check_id = "lemma-min/e-identity/k=" + std::to_string(k);
  cert.index = k;
  cert.mode = verifier::Mode::interval;
  cert.precision_bits = static_cast<int>(prec);
  cert.param("k", std::to_string(k)).param("l", numerics::to_fraction_string(l));
  const Interval L(l, prec);
  const auto e = e_terms(L, k);
  const Interval diff = (e[0] + e[1] + e[2] + e[3] + e[4]) - e_source_expression(L, k);
  settle(cert, verifier::Claim::eq(Rational(0)), verifier::Enclosure::of(diff));
  cert.note("difference between sum of E-terms and the expansion they stand for");
  return cert;
}

}  // namespace qcv::asymptotics
