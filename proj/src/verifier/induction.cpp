#include "qcv/verifier/induction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qcv/orthopoly/extremum.hpp"
#include "qcv/verifier/sums.hpp"

namespace qcv::verifier {

using numerics::Direction;
using numerics::to_decimal_string;
using orthopoly::lambda;

namespace {

Rational q(long p, long r) { return make_rational(p, r); }

APoly zero_poly() {
  APoly p;
  for (auto& c : p) c = 0;
  return p;
}

APoly add(const APoly& x, const APoly& y) {
  APoly r;
  for (size_t i = 0; i < r.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

APoly second_derivative(const APoly& p) {
  APoly r = zero_poly();
  for (size_t i = 2; i < p.size(); ++i) r[i - 2] = p[i] * Rational(static_cast<long>(i * (i - 1)));
  return r;
}

void require_quadratic(const APoly& p) {
  if (p[3] != 0 || p[4] != 0) throw std::invalid_argument("polynomial is not quadratic");
}

std::string dec(const Rational& x, Direction dir = Direction::nearest) { return to_decimal_string(x, 12, dir); }

// g_{n,1} and g_{n,3}: shared between the large-n form and g̃.
APoly g1_poly(long n, const Rational& alpha) {
  const Rational L(lambda(n + 1));
  APoly p = zero_poly();
  p[0] = 512;
  p[1] = Rational(512) / 6 * (L + q(51, 7)) - Rational(512) / 3 * (L + q(100, 7));
  p[2] = Rational(512 * 7) / 36 * (L + q(100, 7)) + Rational(22528) / (63 * alpha);
  return p;
}

APoly g3_poly(long n, const SumSet& s, const VerificationContext& ctx) {
  const Rational L = Rational(lambda(n + 1)) + q(22, 7);
  const Rational& b = ctx.b;
  const Rational& d = ctx.d;
  APoly p = zero_poly();
  const Rational scale = q(128, 9);
  p[2] = scale * b * b * s[3];
  p[1] = scale * 2 * b * (1 - b) * (d / 4) * (L * s[4] - s[5]);
  p[0] = scale * (1 - b) * (1 - b) * (d * d / 16) * (L * s[6] - s[4]);
  return p;
}

Certificate make_cert(const std::string& suite, const std::string& id, long index, Mode mode) {
  Certificate c;
  c.suite = suite;
  c.check_id = id;
  c.index = index;
  c.mode = mode;
  return c;
}

}  // namespace

const Rational& CkTable::upper(long k) const {
  const auto it = upper_.find(k);
  if (it == upper_.end()) throw std::out_of_range("no certified c_k for k = " + std::to_string(k));
  return it->second;
}

CkTable CkTable::compute(long k_from, long k_to) {
  CkTable t;
  for (long k = k_from; k <= k_to; ++k)
    t.set(k, orthopoly::certified_max_abs_difference(static_cast<int>(k)).value_enclosure.hi_rational());
  return t;
}

Rational eval(const APoly& p, const Rational& a) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * a + *it;
  return acc;
}

Rational max_quadratic(const APoly& p, const Rational& lo, const Rational& hi) {
  require_quadratic(p);
  Rational best = std::max(eval(p, lo), eval(p, hi));
  if (p[2] < 0) {
    const Rational v = -p[1] / (2 * p[2]);
    if (lo < v && v < hi) best = std::max(best, eval(p, v));
  }
  return best;
}

Rational min_quadratic(const APoly& p, const Rational& lo, const Rational& hi) {
  APoly neg;
  for (size_t i = 0; i < p.size(); ++i) neg[i] = -p[i];
  return -max_quadratic(neg, lo, hi);
}

std::array<APoly, 3> g_component_polys(long n, const Rational& alpha, const VerificationContext& ctx) {
  const SumSet s = closed_form_sums(n);
  const Rational l4(lambda(n + 4));
  const Rational kappa = (1 - ctx.b) * ctx.d0 / ctx.d;
  APoly g2 = zero_poly();
  g2[2] = q(128, 9) * (s[0] - 2 * kappa / l4 * s[1] + kappa * kappa / (l4 * l4) * s[2]);
  return {g1_poly(n, alpha), g2, g3_poly(n, s, ctx)};
}

std::array<Enclosure, 3> g_components(long n, const Rational& a, const VerificationContext& ctx) {
  const auto lo = g_component_polys(n, ctx.alpha_lo, ctx);
  const auto hi = g_component_polys(n, ctx.alpha_hi, ctx);
  std::array<Enclosure, 3> out;
  for (int i = 0; i < 3; ++i) {
    const Rational x = eval(lo[i], a), y = eval(hi[i], a);
    out[i] = {std::min(x, y), std::max(x, y)};
  }
  return out;
}

bool chi_active(long n) { return n >= 5 && n <= 61; }

APoly g_tilde_poly(long n, const Rational& alpha, const VerificationContext& ctx, bool chi, const CkTable* ck) {
  const SumSet s = closed_form_sums(n);
  const Rational r = (1 - ctx.b) / ctx.d;
  APoly first = zero_poly();
  first[2] = q(128, 9) * s[0];
  first[3] = -q(128, 9) * 2 * r * s[1];
  first[4] = q(128, 9) * r * r * s[2];
  APoly p = add(add(g1_poly(n, alpha), first), g3_poly(n, s, ctx));
  if (chi) {
    if (ck == nullptr) throw std::invalid_argument("g_tilde with the c_k correction needs a c_k table");
    const Rational L = Rational(lambda(n + 1)) + q(22, 7);
    Rational corr(0);
    for (long k = 2; k <= n; ++k) corr += (L - lambda(k)) * (2 * k + 5) * ck->upper(k);
    p[2] += q(128, 9) * corr / 2;
  }
  return p;
}

Enclosure g_tilde(long n, const Rational& a, const VerificationContext& ctx, bool chi, const CkTable* ck) {
  const Rational x = eval(g_tilde_poly(n, ctx.alpha_lo, ctx, chi, ck), a);
  const Rational y = eval(g_tilde_poly(n, ctx.alpha_hi, ctx, chi, ck), a);
  return {std::min(x, y), std::max(x, y)};
}

Certificate induction_check(long n, const VerificationContext& base, bool chi, const CkTable* ck) {
  if (n < 5 || n % 4 != 1) throw std::invalid_argument("induction needs n = 1 mod 4, n >= 5");
  const VerificationContext ctx = base.at(n);
  const Rational a_lo = ctx.a_lo(), a_hi = ctx.a_hi();
  const APoly p_lo = g_tilde_poly(n, ctx.alpha_lo, ctx, chi, ck);
  const APoly p_hi = g_tilde_poly(n, ctx.alpha_hi, ctx, chi, ck);

  auto hull = [](const Rational& x, const Rational& y) { return Enclosure{std::min(x, y), std::max(x, y)}; };
  const Enclosure at_lo = hull(eval(p_lo, a_lo), eval(p_hi, a_lo));
  const Enclosure at_hi = hull(eval(p_lo, a_hi), eval(p_hi, a_hi));
  const Enclosure worst{std::max(at_lo.lo, at_hi.lo), std::max(at_lo.hi, at_hi.hi)};
  const Enclosure a2 = hull(p_lo[2], p_hi[2]);
  const Rational convex = std::min(min_quadratic(second_derivative(p_lo), a_lo, a_hi),
                                   min_quadratic(second_derivative(p_hi), a_lo, a_hi));

  const std::string variant = chi ? "chi=on" : "chi=off";
  Certificate c = make_cert("induction", "induction/n=" + std::to_string(n) + "/" + variant, n, Mode::exact);
  c.param("n", std::to_string(n))
      .param("chi", chi ? "1" : "0")
      .param("d0", numerics::to_fraction_string(ctx.d0))
      .param("a_lo", numerics::to_fraction_string(a_lo))
      .param("a_hi", numerics::to_fraction_string(a_hi))
      .param("g_at_a_lo", dec(at_lo.hi, Direction::up))
      .param("g_at_a_hi", dec(at_hi.hi, Direction::up))
      .param("a2_coefficient", dec(a2.lo, Direction::down))
      .param("min_second_derivative", dec(convex, Direction::down));
  settle(c, Claim::lt(Rational(0)), worst);
  const Verdict coef = decide(Claim::gt(Rational(0)), a2, c.mode);
  const Verdict conv = decide(Claim::gt(Rational(0)), Enclosure::point(convex), c.mode);
  c.verdict = combine(combine(c.verdict, coef), conv);
  c.note("claim: max of the two endpoint values < 0; also a^2-coefficient > 0 (" + to_string(coef) +
         ") and g'' > 0 on the a-range (" + to_string(conv) + ")");
  if (ctx.d0 != 16) c.note("d0 override " + numerics::to_fraction_string(ctx.d0));
  return c;
}

std::vector<Certificate> induction_sweep(long n_from, long n_to, const VerificationContext& ctx, const CkTable& ck) {
  std::vector<Certificate> out;
  long start = std::max<long>(n_from, 5);
  while (start % 4 != 1) ++start;
  for (long n = start; n <= n_to; n += 4) {
    const bool chi = chi_active(n);
    out.push_back(induction_check(n, ctx, chi, &ck));
    if (n == 61 || n == 65) out.push_back(induction_check(n, ctx, !chi, &ck));
  }
  return out;
}

std::vector<Certificate> aggregate_certificates(const VerificationContext& base, long n) {
  const VerificationContext ctx = base.at(n);
  const Rational a_lo = ctx.a_lo(), a_hi = ctx.a_hi();
  const auto lo = g_component_polys(n, ctx.alpha_lo, ctx);
  const auto hi = g_component_polys(n, ctx.alpha_hi, ctx);
  const APoly total_lo = add(add(lo[0], lo[1]), lo[2]);
  const APoly total_hi = add(add(hi[0], hi[1]), hi[2]);

  struct Item {
    const char* name;
    const APoly* p_lo;
    const APoly* p_hi;
    Rational bound;
  };
  const Item items[] = {{"g1", &lo[0], &hi[0], q(-85333, 100)},
                        {"g2", &lo[1], &hi[1], q(571123, 1000)},
                        {"g3", &lo[2], &hi[2], q(28095, 100)},
                        {"total", &total_lo, &total_hi, q(-1257, 1000)}};
  std::vector<Certificate> out;
  for (const Item& it : items) {
    // Supremum over the a-range and both α endpoints, which is a single
    // exact number.
    const Rational sup = std::max(max_quadratic(*it.p_lo, a_lo, a_hi), max_quadratic(*it.p_hi, a_lo, a_hi));
    Certificate c = make_cert("ledger", std::string("ledger/aggregate/") + it.name, n, Mode::exact);
    c.param("n", std::to_string(n))
        .param("a_lo", numerics::to_fraction_string(a_lo))
        .param("a_hi", numerics::to_fraction_string(a_hi));
    settle(c, Claim::le(it.bound, q(1, 1000)), Enclosure::point(sup));
    c.note("sup over a in [d0/lambda_{n+4}, d0/lambda_n] and both alpha endpoints = " + dec(sup));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace qcv::verifier
