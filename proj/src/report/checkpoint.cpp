#include "qcv/report/checkpoint.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <memory>
#include <stdexcept>

namespace qcv::report {

std::string sha256_hex(const std::string& data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 || EVP_DigestFinal_ex(ctx.get(), md, &len) != 1)
    throw std::runtime_error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string config_hash(const Json& config) { return sha256_hex(config.dump()); }

CheckpointWriter::CheckpointWriter(const std::string& path, const std::string& hash, bool fresh, int sync_every)
    : sync_every_(sync_every) {
  file_ = std::fopen(path.c_str(), fresh ? "w" : "a");
  if (file_ == nullptr) throw std::runtime_error("cannot open " + path + ": " + std::strerror(errno));
  if (fresh) {
    Json header = Json::object();
    header["checkpoint"] = kToolName;
    header["config_hash"] = hash;
    const std::string line = header.dump() + "\n";
    std::fwrite(line.data(), 1, line.size(), file_);
    sync();
  }
}

CheckpointWriter::~CheckpointWriter() {
  if (file_ == nullptr) return;
  sync();
  std::fclose(file_);
}

void CheckpointWriter::append(const std::string& task_id, const std::vector<Json>& records) {
  Json line = Json::object();
  line["task"] = task_id;
  line["records"] = records;
  const std::string text = line.dump() + "\n";
  if (std::fwrite(text.data(), 1, text.size(), file_) != text.size())
    throw std::runtime_error("checkpoint write failed");
  if (++pending_ >= sync_every_) sync();
}

void CheckpointWriter::sync() {
  std::fflush(file_);
  ::fsync(::fileno(file_));
  pending_ = 0;
}

std::optional<CheckpointState> read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line.empty()) return std::nullopt;
  CheckpointState state;
  try {
    const Json header = Json::parse(line);
    state.config_hash = header.at("config_hash").get<std::string>();
  } catch (const Json::exception&) {
    return std::nullopt;
  }
  while (std::getline(in, line)) {
    if (in.eof()) break;  // no trailing newline: the write was cut short
    try {
      const Json j = Json::parse(line);
      state.done[j.at("task").get<std::string>()] = j.at("records").get<std::vector<Json>>();
    } catch (const Json::exception&) {
      break;
    }
  }
  return state;
}

}  // namespace qcv::report
