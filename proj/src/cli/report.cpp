#include "mckay/cli/report.hpp"

#include <cstdio>
#include <sstream>

namespace mckay::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::open_question: return "open-question";
  }
  return "fail";
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

RunReport::RunReport(std::string command, const std::vector<std::string>& args)
    : command_(std::move(command)), args_(args), start_(std::chrono::steady_clock::now()) {
  std::string joined = command_;
  for (const auto& a : args_) joined += " " + a;
  set_input(joined);
}

void RunReport::set_input(const std::string& canonical_input) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canonical_input)));
  digest_ = buf;
}

void RunReport::value(const std::string& key, nlohmann::json v, const std::string& provenance) {
  values_.emplace_back(key, std::move(v));
  provenance_.emplace_back(key, provenance);
}

void RunReport::check(const std::string& name, Status status, const std::string& detail) {
  checks_.emplace_back(name, status, detail);
}

void RunReport::set_counterexample(nlohmann::json c) { counterexample_ = std::move(c); }

bool RunReport::failed() const {
  for (const auto& [n, s, d] : checks_)
    if (s == Status::fail) return true;
  return false;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["command"] = command_;
  j["args"] = args_;
  j["input_digest"] = digest_;
  nlohmann::json results = nlohmann::json::object();
  for (const auto& [k, v] : values_) results[k] = v;
  j["results"] = std::move(results);
  nlohmann::json prov = nlohmann::json::object();
  for (const auto& [k, p] : provenance_) prov[k] = p;
  j["provenance"] = std::move(prov);
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& [n, s, d] : checks_) checks[n] = {{"status", to_string(s)}, {"detail", d}};
  j["checks"] = std::move(checks);
  j["status"] = failed() ? "fail" : "pass";
  if (!counterexample_.is_null()) j["counterexample"] = counterexample_;
  j["wall_time_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  return j;
}

std::string RunReport::summary() const {
  std::ostringstream os;
  for (const auto& [k, v] : values_) os << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (const auto& [n, s, d] : checks_) {
    os << "[" << to_string(s) << "] " << n;
    if (!d.empty()) os << ": " << d;
    os << "\n";
  }
  if (!counterexample_.is_null()) os << "counterexample=" << counterexample_.dump() << "\n";
  return os.str();
}

}  // namespace mckay::cli
