#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "qcv/verifier/certificate.hpp"

namespace qcv::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "qcv";
inline constexpr const char* kToolVersion = "1.0.0";

// Significant digits of the outward-rounded enclosure endpoints.
inline constexpr int kEnclosureDigits = 30;

// One certificate record. Every field is always present; runtime_ms is null
// unless `timings` is set.
Json certificate_to_json(const verifier::Certificate& cert, bool timings);

// "<= 3/25", "in [3/10, 33/100]", with the margin appended when nonzero.
std::string claim_string(const verifier::Claim& claim);

// SOURCE_DATE_EPOCH rendered as an ISO 8601 UTC timestamp, or nullopt when
// the variable is unset or not a number.
std::optional<std::string> timestamp_from_env();

struct Summary {
  long pass = 0, fail = 0, inconclusive = 0;
  void add(const std::string& verdict);
  long total() const { return pass + fail + inconclusive; }
};

// {"meta": {...}, "certificates": [...]}.
Json certificate_set(const Json& config, const std::string& config_hash, const std::vector<Json>& records);

// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace qcv::report
