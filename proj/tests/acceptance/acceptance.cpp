// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <mpfr.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qcv/asymptotics/expansion.hpp"
#include "qcv/numerics/elementary.hpp"
#include "qcv/numerics/polynomial.hpp"
#include "qcv/orthopoly/gegenbauer.hpp"
#include "qcv/report/json_io.hpp"
#include "qcv/report/runner.hpp"
#include "qcv/verifier/induction.hpp"

using namespace qcv;
using numerics::Interval;
using numerics::make_rational;
using numerics::parse_rational;
using numerics::Polynomial;
using numerics::Rational;
using report::Json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> problems;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (problems.size() < 8) problems.push_back(what);
  }
};

void print(int id, const std::string& title, const Outcome& o, const std::string& extra = "") {
  std::printf("criterion %d: %s  %s%s\n", id, o.ok ? "PASS" : "FAIL", title.c_str(), extra.c_str());
  for (const auto& p : o.problems) std::printf("    - %s\n", p.c_str());
  if (o.problems.size() == 8) std::printf("    - ...\n");
  std::fflush(stdout);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

class Records {
 public:
  explicit Records(const Json& set) {
    for (const auto& r : set.at("certificates")) by_id_.emplace(r.at("check_id").get<std::string>(), r);
  }

  const Json* find(const std::string& id) const {
    const auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &it->second;
  }

  // Record must exist, Pass, and carry exactly this claim.
  void expect(Outcome& o, const std::string& id, const std::string& relation, const Rational& value,
              const std::optional<Rational>& upper = std::nullopt) const {
    const Json* r = find(id);
    if (!r) return o.require(false, id + " missing");
    const Json& c = r->at("claimed");
    o.require(c.at("relation") == relation && parse_rational(c.at("value").get<std::string>()) == value &&
                  (!upper || parse_rational(c.at("upper").get<std::string>()) == *upper),
              id + " claims " + c.at("relation").get<std::string>() + " " + c.at("value").get<std::string>());
    o.require(r->at("verdict") == "Pass",
              id + " is " + r->at("verdict").get<std::string>() + ", computed [" + lo_str(*r) + ", " + hi_str(*r) + "]");
  }

  template <class F>
  void for_prefix(const std::string& suite, F&& f) const {
    for (const auto& [id, r] : by_id_)
      if (r.at("suite") == suite) f(id, r);
  }

  static Rational lo(const Json& r) { return parse_rational(r.at("computed").at("lo").get<std::string>()); }
  static Rational hi(const Json& r) { return parse_rational(r.at("computed").at("hi").get<std::string>()); }
  static std::string lo_str(const Json& r) { return fmt(numerics::to_double(lo(r))); }
  static std::string hi_str(const Json& r) { return fmt(numerics::to_double(hi(r))); }

 private:
  std::map<std::string, Json> by_id_;
};

int run_all(const fs::path& dir) {
  report::RunConfig cfg;
  cfg.suite = "all";
  cfg.out_dir = dir.string();
  std::ostringstream out, err;
  return report::run_verify(cfg, out, err);
}

// Criterion 8 helpers ---------------------------------------------------------

Rational random_rational(std::mt19937_64& rng, long num_range, long den_max) {
  std::uniform_int_distribution<long> num(-num_range, num_range), den(1, den_max);
  return make_rational(num(rng), den(rng));
}

Rational random_dyadic(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return make_rational(static_cast<long>(u(rng) * 1048576.0), 1048576);
}

// Point inside [lo, hi] at a random rational fraction.
Rational inside(std::mt19937_64& rng, const Rational& lo, const Rational& hi) {
  std::uniform_int_distribution<long> t(0, 1000);
  return lo + (hi - lo) * make_rational(t(rng), 1000);
}

using MpfrFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// Directed-rounding bracket of f(x) at 4000 bits; x must be dyadic.
bool bracket_contains(const Interval& enc, MpfrFn f, const Rational& x) {
  mpfr_t xv, lo, hi;
  mpfr_inits2(4000, xv, lo, hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(xv, x.get_mpq_t(), MPFR_RNDN);
  f(lo, xv, MPFR_RNDD);
  f(hi, xv, MPFR_RNDU);
  const bool ok = mpfr_cmp(enc.lo(), lo) <= 0 && mpfr_cmp(hi, enc.hi()) <= 0;
  mpfr_clears(xv, lo, hi, static_cast<mpfr_ptr>(nullptr));
  return ok;
}

bool gamma_ratio_contains(long k, int twice_s, mpfr_prec_t prec) {
  const Interval enc = numerics::gamma_ratio(k, twice_s, prec);
  mpfr_t a, b, ad, au, bd, bu, lo, hi;
  mpfr_inits2(4000, a, b, ad, au, bd, bu, lo, hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_si(a, k, MPFR_RNDN);
  mpfr_set_si(b, 2 * k + twice_s, MPFR_RNDN);
  mpfr_div_2ui(b, b, 1, MPFR_RNDN);
  mpfr_gamma(ad, a, MPFR_RNDD);
  mpfr_gamma(au, a, MPFR_RNDU);
  mpfr_gamma(bd, b, MPFR_RNDD);
  mpfr_gamma(bu, b, MPFR_RNDU);
  mpfr_div(lo, ad, bu, MPFR_RNDD);
  mpfr_div(hi, au, bd, MPFR_RNDU);
  const bool ok = mpfr_cmp(enc.lo(), lo) <= 0 && mpfr_cmp(hi, enc.hi()) <= 0;
  mpfr_clears(a, b, ad, au, bd, bu, lo, hi, static_cast<mpfr_ptr>(nullptr));
  return ok;
}

long fuzz_violations(Outcome& o) {
  std::mt19937_64 rng(20240607);
  const mpfr_prec_t precs[] = {53, 128, 256};
  long violations = 0;
  auto fail = [&](const std::string& what) {
    ++violations;
    o.require(false, what);
  };
  for (int i = 0; i < 10000; ++i) {
    const mpfr_prec_t prec = precs[rng() % 3];
    const int kind = i % 5;
    if (kind == 0) {
      Rational a1 = random_rational(rng, 1000, 997), a2 = random_rational(rng, 1000, 997);
      Rational b1 = random_rational(rng, 1000, 997), b2 = random_rational(rng, 1000, 997);
      if (a2 < a1) std::swap(a1, a2);
      if (b2 < b1) std::swap(b1, b2);
      const Interval A(a1, a2, prec), B(b1, b2, prec);
      const Rational a = inside(rng, a1, a2), b = inside(rng, b1, b2);
      const int op = static_cast<int>(rng() % 4);
      if (op == 0 && !(A + B).contains(Rational(a + b))) fail("a+b at case " + std::to_string(i));
      if (op == 1 && !(A - B).contains(Rational(a - b))) fail("a-b at case " + std::to_string(i));
      if (op == 2 && !(A * B).contains(Rational(a * b))) fail("a*b at case " + std::to_string(i));
      if (op == 3) {
        const Rational shift = b1 > 0 ? Rational(0) : Rational(Rational(1) - b1);
        const Interval Bp(b1 + shift, b2 + shift, prec);
        if (!(A / Bp).contains(Rational(a / (b + shift)))) fail("a/b at case " + std::to_string(i));
      }
    } else if (kind == 1) {
      const int deg = static_cast<int>(rng() % 11);
      std::vector<Rational> cs;
      for (int j = 0; j <= deg; ++j) cs.push_back(random_rational(rng, 50, 31));
      const Polynomial p(cs);
      Rational x1 = random_rational(rng, 300, 211), x2 = random_rational(rng, 300, 211);
      if (x2 < x1) std::swap(x1, x2);
      const Rational x = inside(rng, x1, x2);
      if (!eval_polynomial(p, Interval(x1, x2, prec)).contains(eval_polynomial(p, x)))
        fail("polynomial at case " + std::to_string(i));
    } else if (kind == 2) {
      Rational a1 = random_rational(rng, 400, 97), a2 = random_rational(rng, 400, 97);
      if (a2 < a1) std::swap(a1, a2);
      const Rational a = inside(rng, a1, a2);
      const int n = static_cast<int>(rng() % 9);
      Rational an(1);
      for (int j = 0; j < n; ++j) an *= a;
      const Interval A(a1, a2, prec);
      if (!pow(A, n).contains(an) || !sqr(A).contains(Rational(a * a)) || !abs(A).contains(Rational(abs(a))))
        fail("power at case " + std::to_string(i));
    } else if (kind == 3) {
      const int f = static_cast<int>(rng() % 6);
      Rational x;
      Interval enc;
      MpfrFn ref = nullptr;
      switch (f) {
        case 0: x = random_dyadic(rng, -40, 40); enc = numerics::sin(Interval(x, prec)); ref = mpfr_sin; break;
        case 1: x = random_dyadic(rng, -40, 40); enc = numerics::cos(Interval(x, prec)); ref = mpfr_cos; break;
        case 2: x = random_dyadic(rng, 0, 100); enc = numerics::sqrt(Interval(x, prec)); ref = mpfr_sqrt; break;
        case 3: x = random_dyadic(rng, -1, 1); enc = numerics::asin(Interval(x, prec)); ref = mpfr_asin; break;
        case 4: x = random_dyadic(rng, 1e-3, 100); enc = numerics::log(Interval(x, prec)); ref = mpfr_log; break;
        default: x = random_dyadic(rng, -30, 30); enc = numerics::exp(Interval(x, prec)); ref = mpfr_exp; break;
      }
      if (!bracket_contains(enc, ref, x)) fail("elementary " + std::to_string(f) + " at case " + std::to_string(i));
    } else {
      const long k = 1 + static_cast<long>(rng() % 500);
      const int twice_s = 1 + 2 * static_cast<int>(rng() % 8);
      if (!gamma_ratio_contains(k, twice_s, prec)) fail("gamma ratio at case " + std::to_string(i));
    }
  }
  return violations;
}

// Exact F̃'_k(cos ζ) enclosed by Horner at 3000 bits.
Interval exact_f_tilde(long k, const Interval& zeta) {
  const Interval c = numerics::cos(zeta.with_precision(3000));
  return eval_polynomial(orthopoly::f_tilde_prime(static_cast<int>(k)), c);
}

}  // namespace

int main() {
  const fs::path root = fs::temp_directory_path() / "qcv_acceptance";
  fs::remove_all(root);
  bool all_ok = true;
  auto finish = [&](int id, const std::string& title, const Outcome& o, const std::string& extra = "") {
    print(id, title, o, extra);
    all_ok = all_ok && o.ok;
  };

  // Timed run of the c_n range on its own.
  double cn_seconds = 0;
  {
    report::RunConfig cfg;
    cfg.suite = "cn";
    cfg.out_dir = (root / "cn").string();
    std::ostringstream out, err;
    const auto t0 = std::chrono::steady_clock::now();
    report::run_verify(cfg, out, err);
    cn_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  const int code1 = run_all(root / "run1");
  const int code2 = run_all(root / "run2");
  const std::string text1 = slurp(root / "run1" / "certificates.json");
  const std::string text2 = slurp(root / "run2" / "certificates.json");
  const Records recs(Json::parse(text1));

  {
    Outcome o;
    for (long n = 6; n <= 428; ++n) {
      const std::string id = "cn/n=" + std::to_string(n);
      if (n <= 29)
        recs.expect(o, id, "<=", make_rational(12, 100));
      else
        recs.expect(o, id, "<", make_rational(26, 1000));
      if (const Json* r = recs.find(id))
        o.require(Records::hi(*r) - Records::lo(*r) <= make_rational(1, 1000), id + " enclosure wider than 1e-3");
    }
    o.require(cn_seconds < 600, "c_n range took " + fmt(cn_seconds) + " s");
    finish(1, "c_n bounds for 6 <= n <= 428", o, " (" + fmt(cn_seconds) + " s)");
  }
  {
    Outcome o;
    recs.expect(o, "one-minus-x2/tail/n=429", "<", make_rational(26, 1000));
    recs.expect(o, "one-minus-x2/c-tilde/nu=7/2", "<=", make_rational(919, 100));
    recs.expect(o, "one-minus-x2/c-tilde/nu=9/2", "<=", make_rational(1102, 100));
    finish(2, "tail bound at n = 429 and C-tilde constants", o);
  }
  {
    Outcome o;
    for (long k = 8; k <= 200; ++k)
      recs.expect(o, "lemma-min/exact/k=" + std::to_string(k), ">=", make_rational(-4, 100));
    for (long k : {201L, 500L, 1000L, 10000L})
      recs.expect(o, "lemma-min/asymptotic/k=" + std::to_string(k), ">=", make_rational(-4, 100));
    finish(3, "min of F~'_k on [0,1] >= -0.04", o);
  }
  {
    Outcome o;
    for (long k = 6; k <= 100; ++k) {
      const std::string id = "pointwise/pt/k=" + std::to_string(k);
      recs.expect(o, id, "in", make_rational(3, 10), make_rational(33, 100));
      if (const Json* r = recs.find(id)) o.require(r->at("mode") == "exact", id + " not exact");
    }
    finish(4, "0.3 <= F~'_k(1 - 8/lambda_k) <= 0.33", o);
  }
  {
    Outcome o;
    for (long n = 5; n <= 101; n += 4) {
      const std::string id = "sums/identity/n=" + std::to_string(n);
      recs.expect(o, id, "==", Rational(0));
      if (const Json* r = recs.find(id)) o.require(Records::lo(*r) == 0 && Records::hi(*r) == 0, id + " nonzero");
    }
    finish(5, "closed-form sums equal direct summation", o);
  }
  {
    Outcome o;
    for (long n = 41; n <= 9997; n += 4) {
      const std::string id = "induction/n=" + std::to_string(n) + "/chi=" + (verifier::chi_active(n) ? "on" : "off");
      recs.expect(o, id, "<", Rational(0));
      if (const Json* r = recs.find(id))
        o.require(std::stod(r->at("params").at("a2_coefficient").get<std::string>()) > 0,
                  id + " a^2 coefficient not positive");
    }
    const Rational margin = make_rational(1, 1000);
    const std::pair<const char*, Rational> aggregates[] = {{"g1", make_rational(-85333, 100)},
                                                           {"g2", make_rational(571123, 1000)},
                                                           {"g3", make_rational(28095, 100)},
                                                           {"total", make_rational(-1257, 1000)}};
    for (const auto& [name, bound] : aggregates) {
      const std::string id = std::string("ledger/aggregate/") + name;
      recs.expect(o, id, "<=", bound);
      if (const Json* r = recs.find(id))
        o.require(Records::hi(*r) + margin <= bound, id + " margin below 1e-3 (hi " + Records::hi_str(*r) + ")");
    }
    finish(6, "induction sweep 41 <= n <= 9997 and n = 10001 aggregates", o);
  }
  {
    Outcome o;
    recs.expect(o, "ledger/base/beta-at-half", "==", make_rational(113, 88));
    recs.expect(o, "ledger/base/alpha-root", "in", make_rational(577, 1000), make_rational(578, 1000));
    recs.expect(o, "ledger/base/a-upper", "<=", make_rational(222, 1000));
    finish(7, "base bounds beta, alpha root and a_upper", o);
  }
  {
    Outcome o;
    using orthopoly::kNu52;
    using orthopoly::kNu72;
    for (int k = 0; k <= 60; ++k) {
      for (auto nu : {kNu52, kNu72}) {
        o.require(orthopoly::check_ode_identity(k, nu), "ODE identity k=" + std::to_string(k));
        if (k >= 1) o.require(orthopoly::check_derivative_identity(k, nu), "derivative identity k=" + std::to_string(k));
        const Polynomial p = orthopoly::normalized_gegenbauer(k, nu);
        o.require(p.reflected() == (k % 2 ? p * Rational(-1) : p), "parity k=" + std::to_string(k));
      }
      for (int l = 0; l <= k; ++l) {
        const Rational ip = orthopoly::weighted_inner_product(k, l);
        o.require(ip == (k == l ? orthopoly::orthogonality_constant(k) : Rational(0)),
                  "orthogonality k=" + std::to_string(k) + ", l=" + std::to_string(l));
      }
    }

    std::mt19937_64 rng(8128);
    std::uniform_real_distribution<double> zeta_dist(M_PI / 8, 3 * M_PI / 8);
    for (long k : {150L, 201L, 250L, 300L, 428L}) {
      const asymptotics::AsymptoticExpansion e(k);
      for (int i = 0; i < 20; ++i) {
        const double zeta = zeta_dist(rng);
        const Interval z = Interval::from_doubles(zeta, zeta, numerics::kDefaultPrecision);
        const Interval exact = exact_f_tilde(k, z);
        o.require(e.f_tilde_prime(z).intersects(exact), "asymptotic misses exact at k=" + std::to_string(k));
        const Interval gap = abs(exact - e.prefactor() * e.partial_sum(z));
        o.require(mpfr_cmp(gap.hi(), (e.prefactor() * e.remainder(z).bound).hi()) <= 0,
                  "remainder bound violated at k=" + std::to_string(k));
      }
    }

    long ledger_bad = 0;
    recs.for_prefix("ledger", [&](const std::string& id, const Json& r) {
      if (r.at("verdict") != "Pass") {
        ++ledger_bad;
        o.require(false, id + " is " + r.at("verdict").get<std::string>());
      }
    });
    const long violations = fuzz_violations(o);
    finish(8, "identities, asymptotic overlap, scalar ledger, containment fuzz", o,
           " (ledger non-Pass: " + std::to_string(ledger_bad) + ", fuzz violations: " + std::to_string(violations) +
               "/10000)");
  }
  {
    Outcome o;
    o.require(!text1.empty(), "first run wrote no certificates.json (exit " + std::to_string(code1) + ")");
    o.require(text1 == text2, "certificates.json differs between runs");
    o.require(code1 == code2, "exit codes differ: " + std::to_string(code1) + " vs " + std::to_string(code2));
    finish(9, "repeated verify all runs are byte-identical", o, " (" + std::to_string(text1.size()) + " bytes)");
  }
  fs::remove_all(root);
  return all_ok ? 0 : 1;
}
