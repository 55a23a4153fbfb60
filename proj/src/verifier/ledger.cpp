#include "qcv/verifier/ledger.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

#include "qcv/numerics/elementary.hpp"
#include "qcv/verifier/base_bounds.hpp"
#include "qcv/verifier/induction.hpp"
#include "qcv/verifier/quotient.hpp"

namespace qcv::verifier {

using numerics::Direction;
using orthopoly::lambda;

namespace {

Rational q(long p, long r) { return make_rational(p, r); }

std::string dec(const Rational& x) { return numerics::to_decimal_string(x, 10, Direction::nearest); }

Certificate exact_cert(const std::string& name) {
  Certificate c;
  c.suite = "ledger";
  c.check_id = "ledger/" + name;
  c.mode = Mode::exact;
  return c;
}

// Largest value of f(n, k, α) over n ≡ 1 (mod 4) in the scan range, even k
// accepted by `in_range`, and both α endpoints.
struct ScanMax {
  Rational value;
  long n = 0, k = 0;
  bool any = false;
};

ScanMax scan_max(const LedgerOptions& o, const VerificationContext& ctx, const std::function<bool(long, long)>& in_range,
                 const std::function<Rational(long, long, const Rational&)>& f) {
  ScanMax m;
  long start = o.scan_n_from;
  while (start % 4 != 1) ++start;
  for (long n = start; n <= o.scan_n_to; n += 4) {
    for (long k = 2; k < n; k += 2) {
      if (!in_range(n, k)) continue;
      for (const Rational& alpha : {ctx.alpha_lo, ctx.alpha_hi}) {
        const Rational v = f(n, k, alpha);
        if (!m.any || v > m.value) {
          m.value = v;
          m.n = n;
          m.k = k;
          m.any = true;
        }
      }
    }
  }
  return m;
}

std::string scan_range(const LedgerOptions& o) {
  return std::to_string(o.scan_n_from) + ".." + std::to_string(o.scan_n_to);
}

Certificate scan_cert(const std::string& name, const LedgerOptions& o, const ScanMax& m, Claim claim) {
  Certificate c = exact_cert(name);
  c.param("n_range", scan_range(o)).param("worst_n", std::to_string(m.n)).param("worst_k", std::to_string(m.k));
  settle(c, std::move(claim), Enclosure::point(m.any ? m.value : Rational(0)));
  return c;
}

Rational minus_quotient(long n, long k, const Rational& alpha) { return -b_quotient(n, k, alpha); }

}  // namespace

std::vector<Certificate> scalar_ledger(const VerificationContext& ctx, const LedgerOptions& o) {
  std::vector<Certificate> out;
  const Rational& b = ctx.b;
  const Rational& d = ctx.d;
  const Rational& m0 = ctx.m0;
  const Rational bd1_constant = (7 * b * b + 10 * b - 1) / 16;

  // 1 - 3w + (7/4)w² is decreasing on [0, (1-b)/2] (vertex at 6/7), so its
  // minimum is the value at (1-b)/2, which is (7b² + 10b - 1)/16.
  {
    Certificate c = exact_cert("case1/constant");
    const Rational w = (1 - b) / 2;
    const Rational at_w = 1 - 3 * w + q(7, 4) * w * w;
    settle(c, Claim::ge(q(191, 1000)), Enclosure::point(bd1_constant));
    if (at_w != bd1_constant) c.verdict = Verdict::fail;
    c.note("(7b^2 + 10b - 1)/16 = " + dec(bd1_constant) + "; equals 1 - 3w + 7w^2/4 at w = (1-b)/2");
    out.push_back(std::move(c));
  }
  {
    Certificate c = exact_cert("case1/margin");
    settle(c, Claim::gt(Rational(0)), Enclosure::point(q(191, 1000) - o.c_small - q(54, 1000)));
    c.note("0.191 - 0.12 - 0.054");
    out.push_back(std::move(c));
  }
  {
    // The k = 6 quotient N/(9(2N + 323)), N = n² + 7n - 231 + 11/(7α), rises
    // to 1/18 as n grows, so its supremum over n >= 65 is 1/18.
    Certificate c = exact_cert("case1/quotient-bound");
    c.param("k", "6");
    settle(c, Claim::lt(q(54, 1000)), Enclosure::point(q(1, 18)));
    std::optional<long> first_bad;
    for (long n = 65; n <= 100001 && !first_bad; n += 4)
      if (b_quotient(n, 6, ctx.alpha_lo) >= q(54, 1000) || b_quotient(n, 6, ctx.alpha_hi) >= q(54, 1000))
        first_bad = n;
    c.note("supremum over n >= 65 is the limit 1/18");
    if (first_bad) c.note("first n = 1 mod 4 reaching 0.054: " + std::to_string(*first_bad));
    out.push_back(std::move(c));
  }
  {
    Certificate c = exact_cert("case1/margin-at-supremum");
    settle(c, Claim::gt(Rational(0)), Enclosure::point(bd1_constant - o.c_small - q(1, 18)));
    c.note("(7b^2 + 10b - 1)/16 - 0.12 - 1/18");
    out.push_back(std::move(c));
  }
  {
    // Case 1 also needs B_{k+1} > B_k and a quotient that falls with k.
    const ScanMax m = scan_max(
        o, ctx, [](long n, long k) { return k >= 6 && 2 * (k + 3) <= n; },
        [](long n, long k, const Rational& al) -> Rational { return b_quotient(n, k + 2, al) - b_quotient(n, k, al); });
    Certificate c = scan_cert("case1/quotient-decreasing", o, m, Claim::le(Rational(0)));
    c.note("max over k of q(k+2) - q(k) for 6 <= k <= n/2 - 1");
    out.push_back(std::move(c));
  }
  {
    const ScanMax m = scan_max(
        o, ctx, [](long n, long k) { return 2 * k >= n - 4 && k <= n - 1; }, minus_quotient);
    Certificate c = scan_cert("case2/quotient-max", o, m, Claim::lt(q(1, 3)));
    c.note("(B_k - B_{k+1})/(B_k + B_{k+1}) over n/2 - 2 <= k <= n - 1");
    out.push_back(std::move(c));
  }
  {
    Certificate c = exact_cert("case2/phi-prime-constant");
    settle(c, Claim::ge(q(105, 1000)), Enclosure::point(b * b + (b + 1) * (3 * b - 1) / 4));
    c.note("b^2 + (b+1)(3b-1)/4");
    out.push_back(std::move(c));
  }
  {
    Certificate c = exact_cert("case2/phi-prime-margin");
    settle(c, Claim::gt(Rational(0)), Enclosure::point(q(105, 1000) - 2 * o.c_large));
    c.note("0.105 - 2 c_k with c_k <= 0.026");
    out.push_back(std::move(c));
  }
  {
    // k <= n/√2 + 2, i.e. 2(k-2)² <= n².
    const ScanMax m = scan_max(
        o, ctx, [](long n, long k) { return 2 * k >= n - 4 && (k <= 2 || 2 * (k - 2) * (k - 2) <= n * n); },
        minus_quotient);
    Certificate c = scan_cert("case2/sub-branch-quotient", o, m, Claim::lt(q(8, 1000)));
    c.note("(B_k - B_{k+1})/(B_k + B_{k+1}) over n/2 - 2 <= k <= n/sqrt(2) + 2");
    out.push_back(std::move(c));
  }
  {
    // h(y) = 1.5b² + (d/(2y))(1-b)b - (1/2)(1 - y(1-b)/(2d))², y = λ_k a ∈ (0, d].
    // For y <= 1/2 the middle term alone exceeds 1, so the scan starts there.
    const mpfr_prec_t prec = numerics::kDefaultPrecision;
    auto h = [&](const Interval& y) {
      const Interval t = Rational(1) - y * ((1 - b) / (2 * d));
      return Interval(q(3, 2) * b * b, prec) + (d * (1 - b) * b / 2) / y - sqr(t) / Rational(2);
    };
    const Rational lo = q(1, 2), hi = d;
    const int cells = 8000;
    Rational enc_lo, min_point;
    for (int i = 0; i <= cells; ++i) {
      const Rational x = lo + (hi - lo) * make_rational(i, cells);
      const Rational p = h(Interval(x, prec)).hi_rational();
      if (i == 0 || p < min_point) min_point = p;
      if (i < cells) {
        const Rational y = lo + (hi - lo) * make_rational(i + 1, cells);
        const Rational v = h(Interval(x, y, prec)).lo_rational();
        if (i == 0 || v < enc_lo) enc_lo = v;
      }
    }
    Certificate c = exact_cert("case2/constant-0.02746");
    c.mode = Mode::interval;
    c.precision_bits = static_cast<int>(prec);
    c.param("y_range", "[1/2, d]").param("cells", std::to_string(cells));
    settle(c, Claim::ge(q(2746, 100000)), {enc_lo, min_point});
    c.note("min over y = lambda_k a of 1.5b^2 + (d/2y)(1-b)b - (1 - y(1-b)/(2d))^2/2");
    out.push_back(std::move(c));
  }
  {
    Certificate c = exact_cert("case2/margin-a");
    settle(c, Claim::gt(Rational(0)), Enclosure::point(q(2746, 100000) - o.c_large - q(16, 1000) * m0));
    c.note("0.02746 - c_k - 0.016 m0 with c_k <= 0.026");
    out.push_back(std::move(c));
  }
  {
    // The bracket grows with λ_k/λ_{k+1}, so its infimum over the sub-case
    // (λ_{k+1} >= λ_n/2 with n >= 65, even k) sits at the smallest such k.
    long k = 2;
    while (k % 2 != 0 || 2 * lambda(k + 1) < lambda(65)) ++k;
    const Rational r = Rational(lambda(k)) / Rational(lambda(k + 1));
    const Rational t = 1 - r * (1 - b) / 2;
    const Rational v = q(3, 2) * b * b + (1 - b) * b / 2 - t * t / 2;
    Certificate c = exact_cert("case2/constant-0.05");
    c.param("k", std::to_string(k));
    settle(c, Claim::ge(q(5, 100)), Enclosure::point(v));
    c.note("1.5b^2 + (1-b)b/2 - (1 - (lambda_k/lambda_{k+1})(1-b)/2)^2/2 at the smallest admissible even k");
    out.push_back(std::move(c));
  }
  {
    Certificate c = exact_cert("case2/margin-b");
    settle(c, Claim::gt(Rational(0)), Enclosure::point(q(5, 100) - o.c_large - q(2, 3) * m0));
    c.note("0.05 - c_k - (2/3) m0 with c_k <= 0.026");
    out.push_back(std::move(c));
  }
  {
    // B_k < B_{k+1} branch: n/2 - 2 <= k <= n/√3, i.e. 3k² <= n².
    const ScanMax m = scan_max(
        o, ctx, [](long n, long k) { return 2 * k >= n - 4 && 3 * k * k <= n * n; },
        [](long n, long k, const Rational& al) { return b_quotient(n, k, al); });
    Certificate c = scan_cert("case2/quotient-bound-increasing", o, m, Claim::le(q(4, 1000)));
    c.note("(B_{k+1} - B_k)/(B_k + B_{k+1}) over n/2 - 2 <= k <= n/sqrt(3)");
    out.push_back(std::move(c));
  }
  {
    Certificate c = exact_cert("case3/constant-1.7956");
    settle(c, Claim::eq(q(17956, 10000)), Enclosure::point(4 * (1 - b) * (1 - b)));
    c.note("4(1-b)^2");
    out.push_back(std::move(c));
  }
  {
    Certificate c = exact_cert("case3/constant-0.04");
    settle(c, Claim::ge(q(4, 100)), Enclosure::point((b * b - o.c_large) / 2));
    c.note("(b^2 - c_k)/2 with c_k <= 0.026");
    out.push_back(std::move(c));
  }
  {
    // a >= 16/λ_{n+4} turns 1.7956/(λ_k a)² into 1.7956/256 (λ_{n+4}/λ_k)².
    Certificate c = exact_cert("case3/constant-0.0071");
    settle(c, Claim::le(q(71, 10000)), Enclosure::point(q(17956, 10000) / (ctx.d0 * ctx.d0)));
    c.note("1.7956/d0^2");
    out.push_back(std::move(c));
  }
  {
    // Case 3: k >= (n-2)/√2, i.e. 2k² >= (n-2)².
    const ScanMax m = scan_max(
        o, ctx, [](long n, long k) { return 2 * k * k >= (n - 2) * (n - 2); },
        [](long n, long k, const Rational& al) -> Rational {
          const Rational ratio = Rational(lambda(n + 4)) / Rational(lambda(k));
          return q(71, 10000) * ratio * ratio + q(4, 100) * minus_quotient(n, k, al);
        });
    Certificate c = scan_cert("case3/sum-0.035", o, m, Claim::le(q(35, 1000)));
    c.note("0.0071 (lambda_{n+4}/lambda_k)^2 + 0.04 (B_k - B_{k+1})/(B_k + B_{k+1}) over k >= (n-2)/sqrt(2)");
    out.push_back(std::move(c));
  }
  {
    Certificate c = exact_cert("case3/margin");
    settle(c, Claim::gt(Rational(0)), Enclosure::point(q(4, 100) - q(35, 1000)));
    c.note("0.04 - 0.035");
    out.push_back(std::move(c));
  }
  {
    // 32/(9α²) <= 128/9 and 11/(7α) <= 22/7 for α >= 1/2; both sides are
    // decreasing in α, so the worst case is the left end.
    Certificate c = exact_cert("alpha-substitution");
    Rational worst(0);
    for (const Rational& al : {ctx.alpha_lo, ctx.alpha_hi}) {
      worst = std::max(worst, Rational(q(32, 9) / (al * al) - q(128, 9)));
      worst = std::max(worst, Rational(q(11, 7) / al - q(22, 7)));
    }
    settle(c, Claim::le(Rational(0)), Enclosure::point(worst));
    c.note("max of 32/(9 alpha^2) - 128/9 and 11/(7 alpha) - 22/7 over the alpha endpoints");
    out.push_back(std::move(c));
  }

  for (auto& c : aggregate_certificates(ctx)) out.push_back(std::move(c));
  for (auto& c : base_bound_certificates(ctx)) out.push_back(std::move(c));
  for (size_t i = 0; i < out.size(); ++i) out[i].index = static_cast<long>(i);
  return out;
}

}  // namespace qcv::verifier
