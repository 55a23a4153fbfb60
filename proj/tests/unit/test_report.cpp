#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcv/report/checkpoint.hpp"
#include "qcv/report/csv.hpp"
#include "qcv/report/json_io.hpp"
#include "qcv/report/runner.hpp"
#include "qcv/report/svg_plot.hpp"

using namespace qcv;
using namespace qcv::report;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("qcv_unit_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int verify(RunConfig cfg) {
  std::ostringstream out, err;
  return run_verify(std::move(cfg), out, err);
}

}  // namespace

TEST_CASE("sha256 known answers") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("csv quoting round trip") {
  Table t;
  t.header = {"a", "b,c", "d"};
  t.rows = {{"1", "say \"hi\"", "x\ny"}, {"", "2", "3"}};
  const std::string text = to_csv(t);
  CHECK(text == "a,\"b,c\",d\n1,\"say \"\"hi\"\"\",\"x\ny\"\n,2,3\n");
  CHECK(text.find('\r') == std::string::npos);
  const Table back = parse_csv(text);
  CHECK(back.header == t.header);
  CHECK(back.rows == t.rows);
  CHECK(parse_csv("x,y\r\n1,2\r\n").rows.size() == 1);
  CHECK_THROWS(parse_csv("x,y\n1\n"));
  CHECK_THROWS(parse_csv("x\n\"open\n"));
}

TEST_CASE("certificate record has every field") {
  verifier::Certificate c;
  c.suite = "cn";
  c.check_id = "cn/n=6";
  c.index = 6;
  c.param("n", "6");
  settle(c, verifier::Claim::le(numerics::make_rational(3, 25)),
         {numerics::make_rational(1, 10), numerics::make_rational(1, 9)});
  c.runtime_ms = 17;
  const Json j = certificate_to_json(c, false);
  std::vector<std::string> keys;
  for (const auto& [k, _] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"suite", "check_id", "index", "params", "claimed", "computed", "verdict",
                                         "mode", "precision_bits", "runtime_ms", "notes"});
  CHECK(j["runtime_ms"].is_null());
  CHECK(certificate_to_json(c, true)["runtime_ms"] == 17);
  CHECK(j["claimed"]["value"] == "3/25");
  CHECK(j["claimed"]["upper"].is_null());
  CHECK(j["verdict"] == "Pass");
  // 1/9 rounded up at 30 digits; 1/10 is exact.
  CHECK(j["computed"]["hi"] == "1.11111111111111111111111111112e-1");
  const auto lo = numerics::parse_rational(j["computed"]["lo"].get<std::string>());
  CHECK(lo <= numerics::make_rational(1, 10));
  CHECK(claim_string(verifier::Claim::in(numerics::make_rational(3, 10), numerics::make_rational(33, 100))) ==
        "in [3/10, 33/100]");
}

TEST_CASE("timestamp comes from SOURCE_DATE_EPOCH") {
  ::setenv("SOURCE_DATE_EPOCH", "86400", 1);
  CHECK(timestamp_from_env() == std::optional<std::string>("1970-01-02T00:00:00Z"));
  ::setenv("SOURCE_DATE_EPOCH", "junk", 1);
  CHECK_FALSE(timestamp_from_env().has_value());
  ::unsetenv("SOURCE_DATE_EPOCH");
  CHECK_FALSE(timestamp_from_env().has_value());
}

TEST_CASE("svg scatter") {
  const std::string one = scatter_svg({{1.0, 2.0}}, {"t", "x", "y"});
  CHECK(one.find("viewBox=\"0 0 960 540\"") != std::string::npos);
  CHECK(one.find("<script") == std::string::npos);
  size_t circles = 0;
  for (size_t p = one.find("<circle"); p != std::string::npos; p = one.find("<circle", p + 1)) ++circles;
  CHECK(circles == 1);
  CHECK(one == scatter_svg({{1.0, 2.0}}, {"t", "x", "y"}));
  const std::string neg = scatter_svg({{1, -3}, {2, 4}}, {"a < b", "x", "y"});
  CHECK(neg.find("stroke-dasharray") != std::string::npos);
  CHECK(neg.find("a &lt; b") != std::string::npos);

  Table t = parse_csv("n,v\n1,2\n2,oops\n3,4\n");
  CHECK(column_points(t, "n", "v").size() == 2);
  CHECK_THROWS_AS(column_points(t, "n", "w"), UsageError);
}

TEST_CASE("checkpoint ignores a torn final line") {
  const fs::path dir = scratch("ckpt");
  fs::create_directories(dir);
  const std::string path = (dir / "checkpoint.log").string();
  {
    CheckpointWriter w(path, "h1", true, 2);
    w.append("t1", {Json{{"x", 1}}});
    w.append("t2", {Json{{"x", 2}}});
  }
  {
    std::ofstream f(path, std::ios::app);
    f << "{\"task\":\"t3\",\"rec";
  }
  const auto st = read_checkpoint(path);
  REQUIRE(st.has_value());
  CHECK(st->config_hash == "h1");
  CHECK(st->done.size() == 2);
  CHECK(st->done.at("t2").front()["x"] == 2);
  CHECK_FALSE(read_checkpoint((dir / "missing.log").string()).has_value());
  fs::remove_all(dir);
}

TEST_CASE("runner: exit codes, resume and determinism") {
  const fs::path a = scratch("run_a"), b = scratch("run_b");
  RunConfig cfg;
  cfg.suite = "sums";
  cfg.from = 5;
  cfg.to = 41;
  cfg.out_dir = a.string();
  // The S5 lower bound at n = 10001 is a genuine Fail.
  CHECK(verify(cfg) == exit_code::failed);
  CHECK(fs::exists(a / "certificates.json"));
  CHECK(fs::exists(a / "sums.csv"));

  RunConfig part = cfg;
  part.out_dir = b.string();
  part.interrupt_after = 3;
  CHECK(verify(part) == exit_code::interrupted);
  CHECK_FALSE(fs::exists(b / "certificates.json"));
  part.interrupt_after.reset();
  part.resume = true;
  part.jobs = 2;
  CHECK(verify(part) == exit_code::failed);
  CHECK(slurp(a / "certificates.json") == slurp(b / "certificates.json"));

  RunConfig changed = part;
  changed.precision_bits = 256;
  CHECK(verify(changed) == exit_code::resume_refused);

  // Resume with no checkpoint at all is a full run.
  const fs::path c = scratch("run_c");
  RunConfig fresh = cfg;
  fresh.out_dir = c.string();
  fresh.resume = true;
  CHECK(verify(fresh) == exit_code::failed);
  CHECK(slurp(a / "certificates.json") == slurp(c / "certificates.json"));

  RunConfig screening = cfg;
  screening.mode = verifier::Mode::float64;
  CHECK(verify(screening) == exit_code::inconclusive);

  RunConfig pass = cfg;
  pass.suite = "cn";
  pass.from = 6;
  pass.to = 12;
  CHECK(verify(pass) == exit_code::ok);
  const Table t = parse_csv(slurp(a / "cn.csv"));
  CHECK(std::vector<std::string>(t.header.begin(), t.header.begin() + 5) ==
        std::vector<std::string>{"n", "c_n_lo", "c_n_hi", "claimed", "verdict"});
  CHECK(t.rows.size() == 7);

  RunConfig bad = cfg;
  bad.from = 50;
  bad.to = 10;
  CHECK(verify(bad) == exit_code::usage);
  bad = cfg;
  bad.suite = "nope";
  CHECK(verify(bad) == exit_code::usage);
  bad = cfg;
  bad.precision_bits = 100;
  CHECK(verify(bad) == exit_code::usage);
  bad = cfg;
  bad.out_dir = "/proc/qcv-cannot-write";
  CHECK(verify(bad) == exit_code::usage);

  ::setenv("QCV_OUT", c.string().c_str(), 1);
  RunConfig env = pass;
  env.out_dir = (a / "ignored").string();
  CHECK(verify(env) == exit_code::ok);
  ::unsetenv("QCV_OUT");
  CHECK_FALSE(fs::exists(a / "ignored"));
  CHECK(fs::exists(c / "cn.csv"));

  std::ostringstream err;
  CHECK(run_plot((c / "cn.csv").string(), "n", "c_n_hi", (c / "p.svg").string(), "", err) == exit_code::ok);
  CHECK(run_plot((c / "cn.csv").string(), "n", "missing", (c / "q.svg").string(), "", err) == exit_code::usage);
  for (const auto& p : {a, b, c}) fs::remove_all(p);
}
