#pragma once

#include <string>
#include <vector>

#include "qcv/report/json_io.hpp"

namespace qcv::report {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Column position, or -1.
  int column(const std::string& name) const;
};

// RFC 4180 with LF line endings. Fields holding a comma, quote, CR or LF are
// quoted, quotes doubled.
std::string csv_field(const std::string& field);
std::string to_csv(const Table& table);

// Accepts LF or CRLF. Throws std::runtime_error on an unterminated quote or
// a row whose width differs from the header.
Table parse_csv(const std::string& text);

// One row per certificate record of `suite`: the index under the suite's own
// name (n or k), the enclosure as <quantity>_lo/_hi, claim, verdict and
// check_id, then every parameter that appears, in first-seen order.
Table suite_table(const std::string& suite, const std::vector<Json>& records);

}  // namespace qcv::report
