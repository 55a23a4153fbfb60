#include "qcv/report/csv.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qcv::report {

namespace {

struct Naming {
  const char* index;
  const char* quantity;
};

Naming naming(const std::string& suite) {
  static const std::map<std::string, Naming> names = {
      {"cn", {"n", "c_n"}},           {"lemma-min", {"k", "min"}},     {"pointwise", {"k", "value"}},
      {"one-minus-x2", {"n", "value"}}, {"sums", {"n", "value"}},        {"ledger", {"index", "value"}},
      {"induction", {"n", "g_max"}},  {"prop-grid", {"n", "excess"}},
  };
  const auto it = names.find(suite);
  return it == names.end() ? Naming{"index", "value"} : it->second;
}

}  // namespace

int Table::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  return it == header.end() ? -1 : static_cast<int>(it - header.begin());
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const Table& table) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cells[i]);
    }
    out += '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
  return out;
}

Table parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, field_started = false;
  size_t i = 0;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
  };
  while (i < text.size()) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        quoted = false;
      } else {
        field += c;
      }
      ++i;
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n' || c == '\r') {
      end_row();
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
    } else {
      field += c;
      field_started = true;
    }
    ++i;
  }
  if (quoted) throw std::runtime_error("unterminated quoted field in CSV");
  if (field_started || !row.empty()) end_row();

  Table t;
  if (rows.empty()) return t;
  t.header = std::move(rows.front());
  for (size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != t.header.size())
      throw std::runtime_error("CSV row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                               " fields, header has " + std::to_string(t.header.size()));
    t.rows.push_back(std::move(rows[r]));
  }
  return t;
}

Table suite_table(const std::string& suite, const std::vector<Json>& records) {
  const Naming nm = naming(suite);
  const std::string quantity = nm.quantity;
  Table t;
  t.header = {nm.index, quantity + "_lo", quantity + "_hi", "claimed", "verdict", "check_id"};
  const size_t fixed = t.header.size();
  std::vector<const Json*> mine;
  for (const auto& r : records) {
    if (r.at("suite").get<std::string>() != suite) continue;
    mine.push_back(&r);
    for (const auto& [key, _] : r.at("params").items()) {
      if (key != nm.index && t.column(key) < 0) t.header.push_back(key);
    }
  }
  for (const Json* r : mine) {
    std::vector<std::string> row(t.header.size());
    row[0] = std::to_string(r->at("index").get<long>());
    row[1] = r->at("computed").at("lo").get<std::string>();
    row[2] = r->at("computed").at("hi").get<std::string>();
    const Json& cl = r->at("claimed");
    std::string claim = cl.at("relation").get<std::string>() + " " + cl.at("value").get<std::string>();
    if (!cl.at("upper").is_null()) claim = "in [" + cl.at("value").get<std::string>() + ", " +
                                           cl.at("upper").get<std::string>() + "]";
    row[3] = claim;
    row[4] = r->at("verdict").get<std::string>();
    row[5] = r->at("check_id").get<std::string>();
    for (size_t c = fixed; c < t.header.size(); ++c) {
      const auto& params = r->at("params");
      const auto it = params.find(t.header[c]);
      if (it != params.end()) row[c] = it->get<std::string>();
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace qcv::report
