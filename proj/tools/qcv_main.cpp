#include <CLI11.hpp>

#include <csignal>
#include <iostream>
#include <map>

#include "qcv/report/runner.hpp"

namespace {

void on_signal(int) { qcv::report::request_stop(); }

}  // namespace

int main(int argc, char** argv) {
  using namespace qcv::report;

  CLI::App app{"Certified numerics for the Q-curvature rigidity argument on S^6"};
  app.require_subcommand(1);

  RunConfig cfg;
  long from = 0, to = 0, d0 = 0, interrupt_after = 0;
  std::string mode = "exact";
  auto* verify = app.add_subcommand("verify", "run a check suite and write certificates");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", cfg.suite, "suite to run")->required()->check(CLI::IsMember(suites));
  auto* from_opt = verify->add_option("--from", from, "first index (suite default when omitted)");
  auto* to_opt = verify->add_option("--to", to, "last index (suite default when omitted)");
  verify->add_option("--mode", mode, "arithmetic: exact, interval or float64 (screening, never Pass)")
      ->check(CLI::IsMember({"exact", "interval", "float64"}));
  verify->add_option("--precision", cfg.precision_bits, "MPFR bits: 64, 128, 256 or 512")
      ->check(CLI::IsMember({64, 128, 256, 512}));
  verify->add_option("--out", cfg.out_dir, "output directory (QCV_OUT overrides)");
  verify->add_flag("--resume", cfg.resume, "continue from checkpoint.log in the output directory");
  verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  auto* d0_opt = verify->add_option("--d0", d0, "override d0 (default 16)")->check(CLI::PositiveNumber);
  verify->add_flag("--timings", cfg.timings, "record runtime_ms (output is then not reproducible)");
  auto* int_opt = verify->add_option("--interrupt-after", interrupt_after, "stop after this many tasks")
                      ->check(CLI::PositiveNumber);

  auto* report = app.add_subcommand("report", "post-process results");
  report->require_subcommand(1);
  auto* plot = report->add_subcommand("plot", "scatter plot of two CSV columns");
  std::string input, xcol, ycol, output, title;
  plot->add_option("--input", input, "CSV file")->required();
  plot->add_option("--x", xcol, "x column")->required();
  plot->add_option("--y", ycol, "y column")->required();
  plot->add_option("--output", output, "SVG file")->required();
  plot->add_option("--title", title, "plot title");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code::usage;
  }

  if (verify->parsed()) {
    if (*from_opt) cfg.from = from;
    if (*to_opt) cfg.to = to;
    if (*d0_opt) cfg.d0 = d0;
    if (*int_opt) cfg.interrupt_after = interrupt_after;
    static const std::map<std::string, qcv::verifier::Mode> modes = {{"exact", qcv::verifier::Mode::exact},
                                                                    {"interval", qcv::verifier::Mode::interval},
                                                                    {"float64", qcv::verifier::Mode::float64}};
    cfg.mode = modes.at(mode);
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    return run_verify(cfg, std::cout, std::cerr);
  }
  return run_plot(input, xcol, ycol, output, title, std::cerr);
}
