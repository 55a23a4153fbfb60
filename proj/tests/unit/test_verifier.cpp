#include <doctest.h>

#include "qcv/orthopoly/gegenbauer.hpp"
#include "qcv/verifier/base_bounds.hpp"
#include "qcv/verifier/envelope.hpp"
#include "qcv/verifier/induction.hpp"
#include "qcv/verifier/ledger.hpp"
#include "qcv/verifier/one_minus_x2.hpp"
#include "qcv/verifier/prop_grid.hpp"
#include "qcv/verifier/quotient.hpp"
#include "qcv/verifier/sums.hpp"

using namespace qcv;
using namespace qcv::verifier;
using numerics::Interval;
using numerics::make_rational;
using numerics::Rational;
using orthopoly::lambda;

namespace {

Rational q(long p, long r) { return make_rational(p, r); }

// The seven series summed term by term, written out independently of the library.
std::array<Rational, 7> brute_sums(long n) {
  std::array<Rational, 7> s;
  for (auto& x : s) x = 0;
  const Rational L(lambda(n + 1));
  for (long k = 2; k <= n; ++k) {
    const Rational lk(lambda(k));
    const Rational w = (L - lk + q(22, 7)) * (2 * k + 5);
    if (2 * k <= n - 3) {
      s[0] += w;
      s[1] += w * lk;
      s[2] += w * lk * lk;
    } else if (2 * k >= n - 1) {
      s[3] += w;
      s[4] += Rational(2 * k + 5) / lk;
      s[5] += 2 * k + 5;
      s[6] += Rational(2 * k + 5) / (lk * lk);
    }
  }
  return s;
}

// g̃_n(a) at α = 1/2, summand by summand.
Rational brute_g_tilde(long n, const Rational& a, const VerificationContext& ctx, bool chi, const CkTable& ck) {
  const Rational L(lambda(n + 1));
  const Rational u = 1 - q(7, 6) * a;
  Rational g = -q(512, 7) * (L + q(51, 7)) * u + q(512, 7) * (L + q(100, 7)) * u * u + q(22528, 63) * 2 * a * a;
  for (long k = 2; k <= n; ++k) {
    const Rational lk(lambda(k));
    const Rational w = q(128, 9) * (L - lk + q(22, 7)) * (2 * k + 5);
    const Rational extra = chi ? ck.upper(k) / 2 * a * a : Rational(0);
    if (2 * k <= n - 3) {
      const Rational inner = 1 - (1 - ctx.b) / ctx.d * lk * a;
      g += w * (inner * inner * a * a + extra);
    } else {
      const Rational inner = ctx.b * a + (1 - ctx.b) * ctx.d / (4 * lk);
      g += w * (inner * inner + extra);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("sums: hand values") {
  const SumSet s9 = closed_form_sums(9);
  CHECK(s9[0] == q(18710, 7));
  const SumSet s5 = closed_form_sums(5);
  CHECK(s5[0] == 0);
  CHECK(s5[5] == 48);
}

TEST_CASE("sums: closed forms against term-by-term summation") {
  for (long n = 5; n <= 101; n += 4) {
    const auto c = closed_form_sums(n);
    const auto b = brute_sums(n);
    for (size_t i = 0; i < 7; ++i) CHECK_MESSAGE(c[i] == b[i], "n=" << n << " S" << i + 1);
    CHECK(check_sum_identity(n).verdict == Verdict::pass);
  }
  // The printed S₂ and S₃ polynomials do not match the series.
  CHECK(printed_s2(41) != brute_sums(41)[1]);
  CHECK(printed_s3(41) != brute_sums(41)[2]);
}

TEST_CASE("sums: S5 limit is below 1.3863") {
  CHECK(check_s5_lower(101).verdict == Verdict::pass);
  CHECK(check_s5_lower(10001).verdict == Verdict::fail);
  CHECK(check_s7_upper(101).verdict == Verdict::pass);
}

TEST_CASE("envelope values and branches") {
  const VerificationContext ctx = VerificationContext{}.at(41);
  const long ln = lambda(41);
  CHECK(envelope_A(Side::plus, Rational(0), 2, false, ctx) == 0);
  CHECK(select_branch(Side::plus, Rational(0), 2, ctx) == EnvelopeBranch::small_lambda);
  CHECK(select_branch(Side::plus, Rational(0), 40, ctx) == EnvelopeBranch::large_lambda);
  CHECK_THROWS(select_branch(Side::plus, Rational(0), 42, ctx));
  CHECK(select_branch(Side::minus, Rational(4) / ln, 2, ctx) == EnvelopeBranch::small_lambda);
  CHECK(select_branch(Side::minus, Rational(5) / ln, 2, ctx) == EnvelopeBranch::large_lambda);
  CHECK(select_branch(Side::minus, Rational(5) / ln, 2, ctx, BranchRule::worked) == EnvelopeBranch::small_lambda);
  CHECK_THROWS(select_branch(Side::minus, Rational(9) / ln, 2, ctx));

  // The small branch is a downward parabola in the mass with vertex d/(2λ_k(1-b)).
  EnvelopeInput in;
  in.lambda_k = lambda(6);
  const Rational vertex = ctx.d / (2 * Rational(in.lambda_k) * (1 - ctx.b));
  in.mass = vertex;
  const Rational top = envelope_A(in, ctx);
  for (const Rational& eps : {q(1, 1000), q(-1, 1000)}) {
    in.mass = vertex + eps;
    CHECK(envelope_A(in, ctx) < top);
  }
  CHECK(top == vertex / 2);

  // Large branch at mass 16/λ_n with λ_k = λ_n: 0.33·16/λ_n + 0.67·2/λ_n.
  in.branch = EnvelopeBranch::large_lambda;
  in.lambda_k = ln;
  in.mass = Rational(16) / ln;
  CHECK(envelope_A(in, ctx) == (q(33, 100) * 16 + q(67, 100) * 2) / ln);
  in.chi = false;
  CHECK(envelope_A(in, ctx) == q(33, 100) * 16 / ln);

  // The two plus branches meet at a₊ = d/(2λ_k).
  EnvelopeInput s, l;
  s.lambda_k = l.lambda_k = 100;
  l.branch = EnvelopeBranch::large_lambda;
  s.mass = l.mass = ctx.d / 200;
  CHECK(envelope_A(s, ctx) == envelope_A(l, ctx));

  in.mass = q(3, 2);
  CHECK_THROWS(envelope_A(in, ctx));
  in.mass = 0;
  in.lambda_k = 13;
  CHECK_THROWS(envelope_A(in, ctx));
}

TEST_CASE("B_k quotient: reduced form equals the ratio") {
  for (const Rational& alpha : {q(1, 2), q(289, 500), q(3, 4)}) {
    for (long n : {41L, 65L, 101L}) {
      for (long k = 2; k < n; ++k) {
        const Rational bk = b_coefficient(n, k, alpha), bk1 = b_coefficient(n, k + 1, alpha);
        CHECK(b_quotient(n, k, alpha) == (bk1 - bk) / (bk1 + bk));
      }
    }
  }
  const Rational direct = q(9, 32) * q(1, 4) * (lambda(42) - lambda(6) + q(22, 7)) * 17;
  CHECK(b_coefficient(41, 6, q(1, 2)) == direct);
  const auto hull = b_quotient(65, 10, Interval(q(1, 2), q(289, 500), 128));
  CHECK(hull.contains(b_quotient(65, 10, q(1, 2))));
  CHECK(hull.contains(b_quotient(65, 10, q(289, 500))));
}

TEST_CASE("B_k quotient falls with even k") {
  // Cross-multiplied from the raw coefficients, independent of b_quotient.
  for (long n = 65; n <= 301; n += 4) {
    for (long k = 6; 2 * (k + 3) <= n; k += 2) {
      for (const Rational& alpha : {q(1, 2), q(289, 500)}) {
        auto ratio = [&](long j) -> Rational {
          const Rational bj = b_coefficient(n, j, alpha), bj1 = b_coefficient(n, j + 1, alpha);
          return (bj1 - bj) / (bj1 + bj);
        };
        CHECK(ratio(k + 2) < ratio(k));
      }
    }
  }
}

TEST_CASE("base bounds") {
  CHECK(beta_bound_printed(q(1, 2)) == q(113, 88));
  CHECK(beta_min(q(1, 2)) == q(113, 88));
  CHECK(alpha_constraint(q(577, 1000)) > 0);
  CHECK(alpha_constraint(q(578, 1000)) < 0);
  const Interval root = alpha_root();
  CHECK(root.lo_double() >= 0.577);
  CHECK(root.hi_double() <= 0.578);
  const BaseBounds bb = base_bounds(VerificationContext{});
  // (6/7)(1 - 113/176) = 27/88 at α = 1/2.
  CHECK(bb.a_upper.contains(q(27, 88)));
}

TEST_CASE("f_k_a at split 1 keeps only the plus envelopes") {
  CkTable ck = CkTable::compute(2, 70);
  const VerificationContext ctx = VerificationContext{}.at(65);
  const Rational a = Rational(16) / lambda(65), alpha = q(1, 2);
  for (long k : {6L, 20L, 40L}) {
    Rational expect = 0;
    for (long j : {k, k + 1}) {
      const Rational lj(lambda(j));
      const Rational env = 4 * lj <= lambda(65) ? Rational(a - (1 - ctx.b) / ctx.d * lj * a * a)
                                                : Rational(ctx.b * a + (1 - ctx.b) * ctx.d / (4 * lj));
      expect += b_coefficient(65, j, alpha) * env * env;
    }
    CHECK(f_k_a(65, k, a, Rational(1), alpha, ctx, ck) == expect);
  }

  // (n, k) = (65, 6), a = 16/λ₆₅: f(λ) <= f(1) on λ = 0.50..0.99 under the
  // branch rule the reduction uses; the theorem's rule breaks it.
  const Rational top = f_k_a(65, 6, a, Rational(1), alpha, ctx, ck, BranchRule::worked);
  bool stated_exceeds = false;
  for (long i = 50; i < 100; ++i) {
    const Rational s = q(i, 100);
    CHECK(f_k_a(65, 6, a, s, alpha, ctx, ck, BranchRule::worked) <= top);
    if (f_k_a(65, 6, a, s, alpha, ctx, ck) > f_k_a(65, 6, a, Rational(1), alpha, ctx, ck)) stated_exceeds = true;
  }
  CHECK(stated_exceeds);
}

TEST_CASE("g tilde against summand-by-summand evaluation") {
  CkTable ck = CkTable::compute(2, 70);
  const VerificationContext ctx;
  for (long n : {5L, 41L, 65L}) {
    const VerificationContext at = ctx.at(n);
    for (const Rational& a : {at.a_lo(), at.a_hi(), Rational((at.a_lo() + at.a_hi()) / 2)}) {
      for (bool chi : {false, true}) {
        CHECK(eval(g_tilde_poly(n, q(1, 2), at, chi, &ck), a) == brute_g_tilde(n, a, at, chi, ck));
      }
    }
  }
  const auto poly = g_tilde_poly(41, q(1, 2), ctx.at(41), false, nullptr);
  CHECK(poly[2] > 0);
  CHECK_THROWS(g_tilde_poly(41, q(1, 2), ctx.at(41), true, nullptr));
  CHECK(chi_active(61));
  CHECK_FALSE(chi_active(65));

  const Certificate off = induction_check(41, ctx, false, &ck);
  CHECK(off.verdict == Verdict::pass);
  CHECK(induction_check(101, ctx, false, &ck).verdict == Verdict::pass);
}

TEST_CASE("quadratic extrema") {
  const APoly p{Rational(1), Rational(-2), Rational(1), Rational(0), Rational(0)};  // (a-1)²
  CHECK(min_quadratic(p, Rational(0), Rational(2)) == 0);
  CHECK(max_quadratic(p, Rational(0), Rational(3)) == 4);
  CHECK(min_quadratic(p, Rational(2), Rational(3)) == 1);
}

TEST_CASE("c_k table") {
  CkTable ck;
  CHECK_FALSE(ck.has(7));
  CHECK_THROWS_AS(ck.upper(7), std::out_of_range);
  ck.set(7, q(1, 10));
  CHECK(ck.upper(7) == q(1, 10));
}

TEST_CASE("ledger shape") {
  LedgerOptions opt;
  opt.scan_n_to = 101;
  const auto ledger = scalar_ledger(VerificationContext{}, opt);
  CHECK(ledger.size() >= 12);
  for (size_t i = 0; i < ledger.size(); ++i) {
    CHECK(ledger[i].suite == "ledger");
    CHECK(ledger[i].index == static_cast<long>(i));
  }
  auto find = [&](const std::string& id) -> const Certificate& {
    for (const auto& c : ledger)
      if (c.check_id == id) return c;
    FAIL("missing " << id);
    return ledger.front();
  };
  // (7b² + 10b - 1)/16 at b = 0.33.
  CHECK(find("ledger/case1/constant").computed.lo == q(30623, 160000));
  CHECK(find("ledger/case3/constant-1.7956").computed.lo == q(17956, 10000));
  CHECK(find("ledger/case1/margin").verdict == Verdict::pass);
}

TEST_CASE("C tilde constants") {
  const Interval c72 = c_tilde(orthopoly::kNu72), c92 = c_tilde(orthopoly::kNu92);
  CHECK(c72.hi_double() <= 9.19);
  CHECK(c92.hi_double() <= 11.02);
  CHECK(c72.lo_double() > 9.18);
  CHECK(c92.lo_double() > 11.01);
  CHECK(check_c_tilde(orthopoly::kNu72).verdict == Verdict::pass);
  for (const auto& c : tail_bound_certificates()) CHECK(c.verdict == Verdict::pass);
}
