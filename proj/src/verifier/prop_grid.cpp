#include "qcv/verifier/prop_grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qcv/verifier/envelope.hpp"
#include "qcv/verifier/quotient.hpp"

namespace qcv::verifier {

namespace {

Rational sq(const Rational& x) { return x * x; }

}  // namespace

Rational f_k_a(long n, long k, const Rational& a, const Rational& split, const Rational& alpha,
               const VerificationContext& base, const CkTable& ck, BranchRule rule) {
  if (k < 2 || k % 2 != 0 || k >= n) throw std::invalid_argument("f_k_a needs even k in [2, n-1]");
  if (split < make_rational(1, 2) || split > 1) throw std::invalid_argument("f_k_a needs split in [1/2, 1]");
  const VerificationContext ctx = base.at(n);
  const bool one = split == 1;
  const Rational ap = split * a, am = (1 - split) * a;
  const Rational bk = b_coefficient(n, k, alpha), bk1 = b_coefficient(n, k + 1, alpha);
  auto pair = [&](long j) -> Rational {
    return sq(envelope_A(Side::plus, ap, j, one, ctx, rule)) + sq(envelope_A(Side::minus, am, j, one, ctx, rule));
  };
  const Rational mix = split * (1 - split) * a * a;
  Rational f = bk * pair(k) + bk1 * pair(k + 1) + 2 * (bk + bk1) * ck.upper(k) * mix;
  if (bk <= bk1)
    f += 2 * (bk1 - bk) * mix;
  else
    f += 2 * (bk - bk1) * ctx.m0 * (1 - split) * a * a;
  return f;
}

Enclosure f_k_a(long n, long k, const Rational& a, const Rational& split, const VerificationContext& ctx,
                const CkTable& ck, BranchRule rule) {
  const Rational x = f_k_a(n, k, a, split, ctx.alpha_lo, ctx, ck, rule);
  const Rational y = f_k_a(n, k, a, split, ctx.alpha_hi, ctx, ck, rule);
  return {std::min(x, y), std::max(x, y)};
}

Certificate prop_grid_check(long n, const VerificationContext& base, const CkTable& ck, bool corrected,
                            BranchRule rule) {
  const VerificationContext ctx = base.at(n);
  Certificate c;
  c.suite = "prop-grid";
  const bool worked = rule == BranchRule::worked;
  c.check_id = "prop-grid/n=" + std::to_string(n) + (corrected ? "/corrected" : "/plain") + (worked ? "/worked" : "");
  c.index = n;
  c.mode = Mode::exact;
  c.param("n", std::to_string(n)).param("form", corrected ? "corrected" : "plain");

  bool first = true;
  Rational worst_lo, worst_hi;
  long worst_k = 0;
  for (long k = 2; k < n; k += 2) {
    for (const Rational& a : {ctx.a_lo(), ctx.a_hi()}) {
      for (const Rational& alpha : {ctx.alpha_lo, ctx.alpha_hi}) {
        Rational top = f_k_a(n, k, a, Rational(1), alpha, ctx, ck, rule);
        if (corrected)
          top += (b_coefficient(n, k, alpha) + b_coefficient(n, k + 1, alpha)) * ck.upper(k) * a * a / 2;
        for (long i = 50; i < 100; ++i) {
          const Rational diff = f_k_a(n, k, a, make_rational(i, 100), alpha, ctx, ck, rule) - top;
          if (first || diff > worst_hi) {
            worst_hi = diff;
            worst_k = k;
          }
          if (first || diff > worst_lo) worst_lo = diff;
          first = false;
        }
      }
    }
  }
  if (first) {
    worst_lo = worst_hi = Rational(0);
  }
  c.param("worst_k", std::to_string(worst_k));
  settle(c, Claim::le(Rational(0)), {worst_lo, worst_hi});
  c.note("max over the lambda grid of f(lambda) - f(1)" + std::string(corrected ? " - (B_k+B_{k+1}) c_k a^2/2" : ""));
  return c;
}

std::vector<Certificate> prop_grid_sweep(long n_from, long n_to, const VerificationContext& ctx, const CkTable& ck) {
  std::vector<Certificate> out;
  long start = std::max<long>(n_from, 5);
  while (start % 4 != 1) ++start;
  for (long n = start; n <= n_to; n += 4) {
    for (BranchRule rule : {BranchRule::stated, BranchRule::worked}) {
      if (n <= 65) out.push_back(prop_grid_check(n, ctx, ck, true, rule));
      if (n >= 41) out.push_back(prop_grid_check(n, ctx, ck, false, rule));
    }
  }
  return out;
}

}  // namespace qcv::verifier
