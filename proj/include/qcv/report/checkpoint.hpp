#pragma once

#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcv/report/json_io.hpp"

namespace qcv::report {

// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& data);

// Hash of the canonical (compact) dump of a run configuration.
std::string config_hash(const Json& config);

// Append-only JSON Lines log: a header line carrying the config hash, then
// one line per finished task with that task's certificate records.
class CheckpointWriter {
 public:
  // `fresh` truncates and writes the header; otherwise appends.
  CheckpointWriter(const std::string& path, const std::string& hash, bool fresh, int sync_every = 100);
  ~CheckpointWriter();
  CheckpointWriter(const CheckpointWriter&) = delete;
  CheckpointWriter& operator=(const CheckpointWriter&) = delete;

  void append(const std::string& task_id, const std::vector<Json>& records);
  // Flush and fsync now.
  void sync();

 private:
  std::FILE* file_ = nullptr;
  int sync_every_;
  int pending_ = 0;
};

struct CheckpointState {
  std::string config_hash;
  std::map<std::string, std::vector<Json>> done;  // task id → records
};

// nullopt when the file is missing or holds no header. A torn final line
// (interrupted write) is ignored.
std::optional<CheckpointState> read_checkpoint(const std::string& path);

}  // namespace qcv::report
