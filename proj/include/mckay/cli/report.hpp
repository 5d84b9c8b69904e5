#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace mckay::cli {

enum class Status { pass, fail, open_question };

std::string to_string(Status s);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& text);

/// Machine-readable result of one CLI invocation. Keys serialize sorted; only wall_time_ms varies
/// between identical runs.
class RunReport {
 public:
  RunReport(std::string command, const std::vector<std::string>& args);

  void set_input(const std::string& canonical_input);
  /// Result value with its provenance tag.
  void value(const std::string& key, nlohmann::json v, const std::string& provenance = "derived");
  void check(const std::string& name, Status status, const std::string& detail = "");
  void set_counterexample(nlohmann::json c);

  bool failed() const;
  nlohmann::json to_json() const;
  /// key=value lines in insertion order, then one line per check.
  std::string summary() const;

 private:
  std::string command_;
  std::vector<std::string> args_;
  std::string digest_;
  std::vector<std::pair<std::string, nlohmann::json>> values_;
  std::vector<std::pair<std::string, std::string>> provenance_;
  std::vector<std::tuple<std::string, Status, std::string>> checks_;
  nlohmann::json counterexample_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace mckay::cli
