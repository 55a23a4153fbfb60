#include "qcv/verifier/base_bounds.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qcv::verifier {

using numerics::make_rational;

namespace {

Rational q(long p, long r) { return make_rational(p, r); }

// Hull of f over [lo, hi] from `cells` interval evaluations, plus the
// largest and smallest exact value at the cell endpoints.
struct Scan {
  Rational lo, hi;          // enclosure of the range of f
  Rational max_point, min_point;
};

Scan scan(const std::function<Interval(const Interval&)>& f, const Rational& lo, const Rational& hi, int cells,
          mpfr_prec_t prec) {
  Scan s;
  bool first = true;
  for (int i = 0; i <= cells; ++i) {
    const Rational x = lo + (hi - lo) * make_rational(i, cells);
    const Interval p = f(Interval(x, prec));
    const Rational pm = p.lo_rational();
    if (first || pm > s.max_point) s.max_point = pm;
    if (first || p.hi_rational() < s.min_point) s.min_point = p.hi_rational();
    if (i < cells) {
      const Rational y = lo + (hi - lo) * make_rational(i + 1, cells);
      const Interval v = f(Interval(x, y, prec));
      if (first || v.lo_rational() < s.lo) s.lo = v.lo_rational();
      if (first || v.hi_rational() > s.hi) s.hi = v.hi_rational();
    }
    first = false;
  }
  return s;
}

Certificate base_cert(const std::string& name) {
  Certificate c;
  c.suite = "ledger";
  c.check_id = "ledger/base/" + name;
  c.index = 0;
  return c;
}

}  // namespace

Rational beta_bound_printed(const Rational& alpha) {
  return q(9, 440) * (29 - q(74, 9) / alpha) * (7 - 1 / alpha);
}

Rational beta_min(const Rational& alpha) {
  return (29 - q(74, 9) / alpha) * (7 - 1 / alpha) / (10 * (q(13, 9) / alpha + 2));
}

Interval beta_min(const Interval& alpha) {
  return (Rational(29) - q(74, 9) / alpha) * (Rational(7) - Rational(1) / alpha) /
         ((q(13, 9) / alpha + Rational(2)) * Rational(10));
}

Rational alpha_constraint(const Rational& alpha) {
  return q(256, 35) * (q(74, 9) / alpha - 29) * (7 - 1 / alpha) + q(512, 7) * (q(13, 9) / alpha + 2) / alpha;
}

Interval alpha_root(int bits, mpfr_prec_t prec) {
  Rational lo = q(1, 2), hi(1);
  if (sgn(alpha_constraint(lo)) <= 0 || sgn(alpha_constraint(hi)) >= 0)
    throw std::logic_error("alpha constraint does not change sign on [1/2, 1]");
  for (int i = 0; i < bits; ++i) {
    const Rational mid = (lo + hi) / 2;
    if (sgn(alpha_constraint(mid)) > 0)
      lo = mid;
    else
      hi = mid;
  }
  return Interval(lo, hi, prec);
}

BaseBounds base_bounds(const VerificationContext& ctx, mpfr_prec_t prec) {
  BaseBounds out{Interval(prec), Interval(prec), Interval(prec)};
  const Scan beta = scan([](const Interval& a) { return beta_min(a); }, ctx.alpha_lo, ctx.alpha_hi, 2000, prec);
  out.beta_lower = Interval(beta.lo, beta.min_point, prec);
  out.alpha_upper = alpha_root(64, prec);
  // a <= (6/7)(1 - α β_min(α)); α runs up to the root of the constraint.
  const Rational top = std::min(ctx.alpha_hi, out.alpha_upper.hi_rational());
  const Scan a = scan([](const Interval& al) { return (Rational(1) - al * beta_min(al)) * q(6, 7); }, ctx.alpha_lo,
                      top, 2000, prec);
  out.a_upper = Interval(a.max_point, a.hi, prec);
  return out;
}

std::vector<Certificate> base_bound_certificates(const VerificationContext& ctx, mpfr_prec_t prec) {
  std::vector<Certificate> out;
  const BaseBounds bb = base_bounds(ctx, prec);

  {
    Certificate c = base_cert("beta-at-half");
    c.mode = Mode::exact;
    c.param("alpha", "1/2");
    settle(c, Claim::eq(q(113, 88)), Enclosure::point(beta_bound_printed(q(1, 2))));
    c.note("(9/440)(29 - 74/(9 alpha))(7 - 1/alpha) at alpha = 1/2; beta_min there is " +
           numerics::to_fraction_string(beta_min(q(1, 2))));
    out.push_back(std::move(c));
  }
  {
    // The printed bound is monotone increasing, so its minimum over the
    // α-interval sits at α = 1/2; the scan confirms it from the sharper β_min.
    Certificate c = base_cert("beta-lower");
    c.mode = Mode::interval;
    c.precision_bits = static_cast<int>(prec);
    c.param("alpha_lo", numerics::to_fraction_string(ctx.alpha_lo))
        .param("alpha_hi", numerics::to_fraction_string(ctx.alpha_hi));
    settle(c, Claim::ge(q(113, 88)), Enclosure::of(bb.beta_lower));
    const Scan gap = scan(
        [](const Interval& a) {
          const Interval printed = (Rational(29) - q(74, 9) / a) * (Rational(7) - Rational(1) / a) * q(9, 440);
          return beta_min(a) - printed;
        },
        ctx.alpha_lo, ctx.alpha_hi, 2000, prec);
    c.note("beta_min minus printed bound >= " + numerics::to_decimal_string(gap.lo, 8, numerics::Direction::down) +
           " over the alpha-interval");
    out.push_back(std::move(c));
  }
  {
    Certificate c = base_cert("alpha-root");
    c.mode = Mode::exact;
    c.param("bisection_steps", "64");
    settle(c, Claim::in(q(577, 1000), q(578, 1000)), Enclosure::of(bb.alpha_upper));
    out.push_back(std::move(c));
  }
  {
    Certificate c = base_cert("a-upper");
    c.mode = Mode::interval;
    c.precision_bits = static_cast<int>(prec);
    settle(c, Claim::le(q(221, 1000) + q(1, 1000)), Enclosure::of(bb.a_upper));
    c.note("max of (6/7)(1 - alpha beta_min(alpha)) over alpha in [1/2, root]; attained at alpha = 1/2 (" +
           numerics::to_fraction_string(q(6, 7) * (1 - q(1, 2) * q(113, 88))) + ")");
    c.note("(6/7)(1 - 0.578 * 113/88) = " +
           numerics::to_decimal_string(q(6, 7) * (1 - q(578, 1000) * q(113, 88)), 8, numerics::Direction::nearest) +
           " pairs alpha = 0.578 with the alpha = 1/2 value of beta");
    out.push_back(std::move(c));
  }
  {
    Certificate c = base_cert("a-base-case");
    c.mode = Mode::interval;
    c.precision_bits = static_cast<int>(prec);
    c.param("n", "5");
    settle(c, Claim::le(ctx.d0 / Rational(orthopoly::lambda(5))), Enclosure::of(bb.a_upper));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace qcv::verifier
