#include "qcv/report/suites.hpp"

#include <algorithm>

#include "qcv/asymptotics/lower_bound.hpp"
#include "qcv/asymptotics/theta_window.hpp"
#include "qcv/orthopoly/gegenbauer.hpp"
#include "qcv/report/svg_plot.hpp"
#include "qcv/verifier/ledger.hpp"
#include "qcv/verifier/one_minus_x2.hpp"
#include "qcv/verifier/polynomial_checks.hpp"
#include "qcv/verifier/prop_grid.hpp"
#include "qcv/verifier/sums.hpp"

namespace qcv::report {

using verifier::Certificate;
using Certs = std::vector<Certificate>;

namespace {

// k beyond the exact-polynomial range is sampled, not swept.
constexpr long kLemmaExactMax = 200;
const long kLemmaAsymptoticSamples[] = {201, 500, 1000, 10000};

std::string key(const std::string& suite, const std::string& what, long i) {
  return suite + "/" + what + "=" + std::to_string(i);
}

long first_1_mod_4(long from) {
  long n = std::max<long>(from, 5);
  while (n % 4 != 1) ++n;
  return n;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"cn",   "lemma-min", "pointwise", "one-minus-x2",
                                                 "sums", "ledger",    "induction", "prop-grid"};
  return names;
}

bool is_suite(const std::string& name) { return suite_rank(name) >= 0; }

int suite_rank(const std::string& name) {
  const auto& n = suite_names();
  const auto it = std::find(n.begin(), n.end(), name);
  return it == n.end() ? -1 : static_cast<int>(it - n.begin());
}

SuiteRange default_range(const std::string& suite) {
  if (suite == "cn") return {1, 6, 428};
  if (suite == "lemma-min") return {2, 8, 10000};
  if (suite == "pointwise") return {2, 6, 100};
  if (suite == "one-minus-x2") return {12, 12, 100};
  if (suite == "sums") return {5, 5, 101};
  if (suite == "ledger") return {0, 0, 0};
  if (suite == "induction") return {5, 5, 9997};
  if (suite == "prop-grid") return {5, 5, 101};
  throw UsageError("unknown suite '" + suite + "'");
}

const verifier::CkTable& SharedTables::ck() {
  std::call_once(once_, [this] { ck_ = verifier::CkTable::compute(2, max_k_); });
  return ck_;
}

std::vector<Task> build_tasks(const RunConfig& config) {
  if (config.suite != "all" && !is_suite(config.suite)) throw UsageError("unknown suite '" + config.suite + "'");
  const std::vector<std::string> selected =
      config.suite == "all" ? suite_names() : std::vector<std::string>{config.suite};

  verifier::VerificationContext ctx;
  if (config.d0) ctx.d0 = *config.d0;

  auto tables = std::make_shared<SharedTables>();
  std::vector<Task> tasks;
  auto add = [&](std::string id, const std::string& suite, bool precise,
                 std::function<Certs(mpfr_prec_t)> run) {
    tasks.push_back({std::move(id), suite, precise, std::move(run)});
  };

  for (const auto& suite : selected) {
    const SuiteRange dr = default_range(suite);
    long from = dr.from, to = dr.to;
    if (config.suite != "all") {
      from = config.from.value_or(dr.from);
      to = config.to.value_or(dr.to);
    }
    if (from > to) throw UsageError("empty range: --from " + std::to_string(from) + " > --to " + std::to_string(to));
    if (suite != "ledger" && from < dr.min)
      throw UsageError(suite + " needs --from >= " + std::to_string(dr.min));

    if (suite == "cn") {
      for (long n = from; n <= to; ++n)
        add(key("cn", "n", n), suite, false, [n](mpfr_prec_t) { return Certs{verifier::cn_check(n)}; });
    } else if (suite == "lemma-min") {
      for (long k = from; k <= std::min(to, kLemmaExactMax); ++k)
        add(key("lemma-min", "k", k), suite, false, [k](mpfr_prec_t) { return Certs{verifier::lemma_min_check(k)}; });
      for (long k : kLemmaAsymptoticSamples) {
        if (k < from || k > to) continue;
        add(key("lemma-min", "k", k), suite, true,
            [k](mpfr_prec_t p) { return Certs{asymptotics::check_lower_bound_large_k(k, p)}; });
      }
    } else if (suite == "pointwise") {
      for (long k = from; k <= to; ++k)
        add(key("pointwise", "k", k), suite, false,
            [k](mpfr_prec_t) { return Certs{verifier::pt_check(k), verifier::pointwise_upper_check(k)}; });
    } else if (suite == "one-minus-x2") {
      add("one-minus-x2/constants", suite, true, [](mpfr_prec_t p) {
        Certs out{verifier::check_c_tilde(orthopoly::kNu72, p), verifier::check_c_tilde(orthopoly::kNu92, p)};
        for (auto& c : verifier::tail_bound_certificates(p)) out.push_back(std::move(c));
        return out;
      });
      for (long n = from; n <= to; ++n) {
        add(key("one-minus-x2", "n", n), suite, true, [n](mpfr_prec_t p) {
          Certs out;
          for (const auto nu : {orthopoly::kNu72, orthopoly::kNu92}) {
            out.push_back(verifier::check_one_minus_x2_bound(static_cast<int>(n), nu, p));
            out.push_back(asymptotics::theta_window_samples(static_cast<int>(n), nu));
          }
          return out;
        });
      }
    } else if (suite == "sums") {
      for (long n = first_1_mod_4(from); n <= to; n += 4)
        add(key("sums", "n", n), suite, false, [n](mpfr_prec_t) { return Certs{verifier::check_sum_identity(n)}; });
      add("sums/large-n", suite, false, [](mpfr_prec_t) {
        return Certs{verifier::check_s5_lower(10001), verifier::check_s7_upper(10001)};
      });
    } else if (suite == "ledger") {
      add("ledger", suite, false, [ctx](mpfr_prec_t) { return verifier::scalar_ledger(ctx); });
    } else if (suite == "induction") {
      tables->require(65);
      for (long n = first_1_mod_4(from); n <= to; n += 4) {
        add(key("induction", "n", n), suite, false,
            [n, ctx, tables](mpfr_prec_t) { return verifier::induction_sweep(n, n, ctx, tables->ck()); });
      }
    } else if (suite == "prop-grid") {
      tables->require(to);
      for (long n = first_1_mod_4(from); n <= to; n += 4) {
        add(key("prop-grid", "n", n), suite, false,
            [n, ctx, tables](mpfr_prec_t) { return verifier::prop_grid_sweep(n, n, ctx, tables->ck()); });
      }
    }
  }
  return tasks;
}

}  // namespace qcv::report
