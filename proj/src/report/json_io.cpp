#include "qcv/report/json_io.hpp"

#include <cerrno>
#include <cstdlib>
#include <ctime>

namespace qcv::report {

using numerics::Direction;
using verifier::Certificate;
using verifier::Claim;
using verifier::Relation;

std::string claim_string(const Claim& claim) {
  std::string s;
  if (claim.relation == Relation::in) {
    s = "in [" + numerics::to_fraction_string(claim.value) + ", " + numerics::to_fraction_string(claim.upper.value()) +
        "]";
  } else {
    s = verifier::to_string(claim.relation) + " " + numerics::to_fraction_string(claim.value);
  }
  if (claim.margin != 0) s += " margin " + numerics::to_fraction_string(claim.margin);
  return s;
}

Json certificate_to_json(const Certificate& cert, bool timings) {
  Json params = Json::object();
  for (const auto& [k, v] : cert.params) params[k] = v;

  Json claimed = Json::object();
  claimed["relation"] = verifier::to_string(cert.claimed.relation);
  claimed["value"] = numerics::to_fraction_string(cert.claimed.value);
  claimed["upper"] = cert.claimed.upper ? Json(numerics::to_fraction_string(*cert.claimed.upper)) : Json(nullptr);
  claimed["margin"] = numerics::to_fraction_string(cert.claimed.margin);

  Json computed = Json::object();
  computed["lo"] = numerics::to_decimal_string(cert.computed.lo, kEnclosureDigits, Direction::down);
  computed["hi"] = numerics::to_decimal_string(cert.computed.hi, kEnclosureDigits, Direction::up);

  Json j = Json::object();
  j["suite"] = cert.suite;
  j["check_id"] = cert.check_id;
  j["index"] = cert.index;
  j["params"] = std::move(params);
  j["claimed"] = std::move(claimed);
  j["computed"] = std::move(computed);
  j["verdict"] = verifier::to_string(cert.verdict);
  j["mode"] = verifier::to_string(cert.mode);
  j["precision_bits"] = cert.precision_bits;
  j["runtime_ms"] = timings && cert.runtime_ms ? Json(*cert.runtime_ms) : Json(nullptr);
  j["notes"] = cert.notes;
  return j;
}

std::optional<std::string> timestamp_from_env() {
  const char* raw = std::getenv("SOURCE_DATE_EPOCH");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const long long secs = std::strtoll(raw, &end, 10);
  if (errno != 0 || *end != '\0' || secs < 0) return std::nullopt;
  const std::time_t t = static_cast<std::time_t>(secs);
  std::tm tm{};
  if (gmtime_r(&t, &tm) == nullptr) return std::nullopt;
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string(buf);
}

void Summary::add(const std::string& verdict) {
  if (verdict == "Pass")
    ++pass;
  else if (verdict == "Fail")
    ++fail;
  else
    ++inconclusive;
}

Json certificate_set(const Json& config, const std::string& config_hash, const std::vector<Json>& records) {
  Summary s;
  for (const auto& r : records) s.add(r.at("verdict").get<std::string>());
  Json meta = Json::object();
  meta["tool"] = kToolName;
  meta["tool_version"] = kToolVersion;
  meta["config_hash"] = config_hash;
  const auto ts = timestamp_from_env();
  meta["timestamp"] = ts ? Json(*ts) : Json(nullptr);
  meta["config"] = config;
  meta["summary"] = {{"total", s.total()}, {"pass", s.pass}, {"fail", s.fail}, {"inconclusive", s.inconclusive}};

  Json out = Json::object();
  out["meta"] = std::move(meta);
  out["certificates"] = Json::array();
  for (const auto& r : records) out["certificates"].push_back(r);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qcv::report
