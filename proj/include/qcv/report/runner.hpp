#pragma once

#include <iosfwd>
#include <string>

#include "qcv/report/json_io.hpp"
#include "qcv/report/suites.hpp"

namespace qcv::report {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;
inline constexpr int inconclusive = 2;
inline constexpr int usage = 64;
inline constexpr int resume_refused = 65;
inline constexpr int interrupted = 130;
}  // namespace exit_code

// The fields that determine the output; hashed for resume.
Json config_json(const RunConfig& config);

// Async-signal-safe: workers stop taking new tasks, the checkpoint is synced
// and run_verify returns exit_code::interrupted.
void request_stop();

// Runs the selected suite(s) and writes certificates.json, <suite>.csv,
// checkpoint.log and the standard scatter plots into the output directory
// (QCV_OUT overrides config.out_dir). Returns one of exit_code.
int run_verify(RunConfig config, std::ostream& out, std::ostream& err);

// Scatter plot of two CSV columns.
int run_plot(const std::string& input, const std::string& x, const std::string& y, const std::string& output,
             const std::string& title, std::ostream& err);

}  // namespace qcv::report
