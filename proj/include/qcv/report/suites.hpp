#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qcv/verifier/certificate.hpp"
#include "qcv/verifier/context.hpp"
#include "qcv/verifier/induction.hpp"

namespace qcv::report {

struct RunConfig {
  std::string suite = "all";
  std::optional<long> from, to;  // suite default when unset
  verifier::Mode mode = verifier::Mode::exact;
  int precision_bits = 128;
  std::string out_dir = "qcv-out";
  bool resume = false;
  std::optional<long> d0;
  int jobs = 1;
  bool timings = false;
  std::optional<long> interrupt_after;  // stop after this many tasks (testing aid)
};

// In output order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
int suite_rank(const std::string& name);

struct SuiteRange {
  long min;  // smallest admissible index
  long from, to;
};
SuiteRange default_range(const std::string& suite);

// Certified c_k bounds shared by the induction and prop-grid tasks, computed
// once on first use.
class SharedTables {
 public:
  // Widens the table; only before the first ck() call.
  void require(long k) { max_k_ = std::max(max_k_, k); }
  const verifier::CkTable& ck();

 private:
  long max_k_ = 2;
  std::once_flag once_;
  verifier::CkTable ck_;
};

// A unit of work; it may emit several certificates. `precision_sensitive`
// tasks are retried at higher MPFR precision while Inconclusive.
struct Task {
  std::string id;
  std::string suite;
  bool precision_sensitive = false;
  std::function<std::vector<verifier::Certificate>(mpfr_prec_t)> run;
};

// Throws UsageError for an unknown suite or a range outside the suite's
// domain. `all` uses every suite's default range.
std::vector<Task> build_tasks(const RunConfig& config);

}  // namespace qcv::report
