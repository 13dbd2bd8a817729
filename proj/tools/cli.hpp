#ifndef QCERT_TOOLS_CLI_HPP
#define QCERT_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "qcert/exact_arith.hpp"

namespace qcert::cli {

/// Environment variable naming the default config file.
inline constexpr const char* config_env = "QCERT_CONFIG";

struct RunConfig {
  FactorBudget budget;
  unsigned long witness_bound = 2000;
  unsigned long curve_height = 300;
  std::uint64_t seed = 0x51c0ffee;
  std::string format = "json-lines";  // or "tsv"
  std::string output;                 // empty: standard output
  unsigned jobs = 1;
};

/// Reads a JSON object with any of the keys seed, format, output, jobs,
/// trial_bound, rho_iterations, wall_time_ms, witness_bound, curve_height.
/// Throws qcert::Error(invalid_argument) on malformed input.
RunConfig load_config(const std::string& path, RunConfig base = {});

/// Exit codes: 0 report produced or all certified, 1 some certificate not
/// certified, 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcert::cli

#endif
