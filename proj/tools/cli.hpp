#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bgposet::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,     // a verify property or formula/oracle cross-check failed
  kBadInput = 2,        // parse failure, invalid order, invalid vertex
  kPrecondition = 3,    // input is valid but the requested method cannot apply
  kUnwritable = 4,      // output path could not be written
};

/// Size caps read from an optional JSON file named by $BGPOSET_CONFIG, then
/// overridden field by field from environment variables of the form
/// BGPOSET_<FIELD_IN_UPPER_CASE>.
struct Config {
  int max_order = 64;
  int permutation_sweep_max_n = 6;
  int bg_sweep_max_n = 7;
  int graph_export_max_n = 12;
  int reduction_oracle_max_n = 8;
};

Config load_config();

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Config& config);

}  // namespace bgposet::cli
