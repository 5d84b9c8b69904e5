#pragma once

#include <cstdint>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "mckay/cli/report.hpp"

namespace mckay::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int property_failure = 1;
inline constexpr int parse_error = 2;
inline constexpr int cap_exceeded = 3;
inline constexpr int unsupported = 4;
}  // namespace exit_code

/// Runs `mckay <args...>`; the report (or a diagnostic) goes to out/err only once complete.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::uint64_t seed = 7;
  std::set<std::string> only;  // empty: every check
  unsigned max_n = 30;
  unsigned random_instances = 50;
};

/// Names of the checks run by `verify`, in execution order.
const std::vector<std::string>& verify_check_names();

/// Runs the property suite into `report`, stopping at the first failing check.
void run_verify(const VerifyOptions& opts, RunReport& report);

}  // namespace mckay::cli
