#include "qcv/report/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "qcv/report/checkpoint.hpp"
#include "qcv/report/csv.hpp"
#include "qcv/report/svg_plot.hpp"

namespace qcv::report {

namespace fs = std::filesystem;
using verifier::Certificate;
using verifier::Mode;
using verifier::Verdict;

namespace {

volatile std::sig_atomic_t g_stop = 0;

constexpr int kMaxPrecision = 512;

bool valid_precision(int bits) { return bits == 64 || bits == 128 || bits == 256 || bits == 512; }

void write_file(const fs::path& path, const std::string& text) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
    if (!f.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

bool any_inconclusive(const std::vector<Certificate>& certs) {
  return std::any_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.verdict == Verdict::inconclusive; });
}

std::vector<Certificate> run_task(const Task& task, const RunConfig& config) {
  mpfr_prec_t prec = config.precision_bits;
  std::vector<Certificate> certs;
  try {
    certs = task.run(prec);
    while (task.precision_sensitive && any_inconclusive(certs) && prec < kMaxPrecision) {
      prec *= 2;
      certs = task.run(prec);
      for (auto& c : certs) c.note("rerun at " + std::to_string(prec) + " bits after an Inconclusive result");
    }
  } catch (const std::exception& e) {
    Certificate c;
    c.suite = task.suite;
    c.check_id = task.id + "/error";
    c.verdict = Verdict::inconclusive;
    c.note(std::string("check raised: ") + e.what());
    certs = {c};
  }
  if (config.mode == Mode::float64) {
    for (auto& c : certs) {
      c.mode = Mode::float64;
      if (c.verdict != Verdict::inconclusive) {
        c.note("float64 screening, unrounded verdict " + verifier::to_string(c.verdict));
        c.verdict = Verdict::inconclusive;
      }
    }
  }
  return certs;
}

struct Keyed {
  int rank;
  long index;
  Json record;
};

void write_plot(const fs::path& dir, const std::string& name, const Table& table, const std::string& x,
                const std::string& y, const std::string& title, long x_lo, long x_hi) {
  Table sub{table.header, {}};
  const int cx = table.column(x);
  for (const auto& row : table.rows) {
    const long v = std::strtol(row[cx].c_str(), nullptr, 10);
    if (v >= x_lo && v <= x_hi) sub.rows.push_back(row);
  }
  const auto pts = column_points(sub, x, y);
  if (pts.empty()) return;
  write_file(dir / name, scatter_svg(pts, {title, x, y}));
}

}  // namespace

void request_stop() { g_stop = 1; }

Json config_json(const RunConfig& c) {
  Json j = Json::object();
  j["suite"] = c.suite;
  j["from"] = c.from ? Json(*c.from) : Json(nullptr);
  j["to"] = c.to ? Json(*c.to) : Json(nullptr);
  j["mode"] = verifier::to_string(c.mode);
  j["precision_bits"] = c.precision_bits;
  j["d0"] = c.d0 ? Json(*c.d0) : Json(nullptr);
  j["timings"] = c.timings;
  j["tool_version"] = kToolVersion;
  return j;
}

int run_verify(RunConfig config, std::ostream& out, std::ostream& err) {
  if (const char* env = std::getenv("QCV_OUT"); env != nullptr && *env != '\0') config.out_dir = env;
  if (!valid_precision(config.precision_bits)) {
    err << "error: --precision must be one of 64, 128, 256, 512\n";
    return exit_code::usage;
  }
  if (config.jobs < 1) {
    err << "error: --jobs must be at least 1\n";
    return exit_code::usage;
  }
  std::vector<Task> tasks;
  try {
    tasks = build_tasks(config);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }

  const fs::path dir(config.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    err << "error: cannot create output directory " << dir << "\n";
    return exit_code::usage;
  }

  const Json cfg = config_json(config);
  const std::string hash = config_hash(cfg);
  const fs::path log_path = dir / "checkpoint.log";

  std::map<std::string, std::vector<Json>> done;
  bool fresh = true;
  if (config.resume) {
    if (auto state = read_checkpoint(log_path.string())) {
      if (state->config_hash != hash) {
        err << "error: checkpoint in " << dir << " belongs to a different configuration; refusing to resume\n";
        return exit_code::resume_refused;
      }
      done = std::move(state->done);
      fresh = false;
    }
  }

  std::unique_ptr<CheckpointWriter> writer;
  try {
    writer = std::make_unique<CheckpointWriter>(log_path.string(), hash, fresh);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }

  std::vector<size_t> pending;
  for (size_t i = 0; i < tasks.size(); ++i)
    if (!done.count(tasks[i].id)) pending.push_back(i);

  std::vector<std::vector<Json>> results(tasks.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  long finished = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    while (!stop && !g_stop) {
      const size_t slot = next++;
      if (slot >= pending.size()) return;
      const Task& task = tasks[pending[slot]];
      const auto t0 = std::chrono::steady_clock::now();
      auto certs = run_task(task, config);
      const long ms = static_cast<long>(
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
      std::vector<Json> records;
      for (auto& c : certs) {
        c.runtime_ms = ms;
        records.push_back(certificate_to_json(c, config.timings));
      }
      std::lock_guard<std::mutex> lock(mu);
      try {
        writer->append(task.id, records);
      } catch (...) {
        failure = std::current_exception();
        stop = true;
        return;
      }
      results[pending[slot]] = std::move(records);
      ++finished;
      if (config.interrupt_after && finished >= *config.interrupt_after) stop = true;
    }
  };

  const int nthreads = std::min<int>(config.jobs, static_cast<int>(std::max<size_t>(pending.size(), 1)));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  writer->sync();
  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
    }
    return exit_code::usage;
  }
  if (static_cast<size_t>(finished) < pending.size()) {
    err << "interrupted after " << finished << " of " << pending.size()
        << " pending tasks; rerun with --resume to continue\n";
    return exit_code::interrupted;
  }

  std::vector<Keyed> all;
  for (size_t i = 0; i < tasks.size(); ++i) {
    auto& recs = results[i].empty() && done.count(tasks[i].id) ? done[tasks[i].id] : results[i];
    for (auto& r : recs) {
      const std::string suite = r.at("suite").get<std::string>();
      all.push_back({suite_rank(suite), r.at("index").get<long>(), std::move(r)});
    }
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const Keyed& a, const Keyed& b) { return std::tie(a.rank, a.index) < std::tie(b.rank, b.index); });
  std::vector<Json> records;
  std::set<std::string> ids;
  for (auto& k : all) {
    const std::string id = k.record.at("check_id").get<std::string>();
    if (!ids.insert(id).second) {
      err << "error: duplicate check_id " << id << "\n";
      return exit_code::usage;
    }
    records.push_back(std::move(k.record));
  }

  try {
    write_file(dir / "certificates.json", dump(certificate_set(cfg, hash, records)));
    const std::vector<std::string> selected =
        config.suite == "all" ? suite_names() : std::vector<std::string>{config.suite};
    for (const auto& suite : selected) {
      const Table t = suite_table(suite, records);
      write_file(dir / (suite + ".csv"), to_csv(t));
      if (suite == "cn") {
        write_plot(dir, "cn_small.svg", t, "n", "c_n_hi", "c_n, 6 <= n <= 30", 6, 30);
        write_plot(dir, "cn_large.svg", t, "n", "c_n_hi", "c_n, 30 <= n <= 428", 30, 428);
      } else if (suite == "induction") {
        write_plot(dir, "induction_a_lo.svg", t, "n", "g_at_a_lo", "g~_n(16/lambda_{n+4})", 41, 9997);
        write_plot(dir, "induction_a_hi.svg", t, "n", "g_at_a_hi", "g~_n(16/lambda_n)", 41, 9997);
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }

  Summary total;
  std::map<std::string, Summary> per_suite;
  for (const auto& r : records) {
    const std::string v = r.at("verdict").get<std::string>();
    total.add(v);
    per_suite[r.at("suite").get<std::string>()].add(v);
  }
  for (const auto& name : suite_names()) {
    const auto it = per_suite.find(name);
    if (it == per_suite.end()) continue;
    out << name << ": " << it->second.pass << " pass, " << it->second.fail << " fail, " << it->second.inconclusive
        << " inconclusive\n";
  }
  out << "certificates: " << (dir / "certificates.json").string() << "\n";
  if (total.fail > 0) return exit_code::failed;
  if (total.inconclusive > 0) return exit_code::inconclusive;
  return exit_code::ok;
}

int run_plot(const std::string& input, const std::string& x, const std::string& y, const std::string& output,
             const std::string& title, std::ostream& err) {
  std::ifstream in(input, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << input << "\n";
    return exit_code::usage;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    const Table t = parse_csv(ss.str());
    const auto pts = column_points(t, x, y);
    write_file(output, scatter_svg(pts, {title.empty() ? y + " vs " + x : title, x, y}));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
  return exit_code::ok;
}

}  // namespace qcv::report
