#ifndef TGCC_HARNESS_HPP
#define TGCC_HARNESS_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tgcc/report.hpp"

namespace tgcc {

/// All units: angles in radians, lengths in domain units, time in units of
/// the unit propagation speed.
struct SweepConfig {
  std::string command;
  std::map<std::string, std::string> args;  // key=value pairs
  unsigned long long seed = 0;
  std::string out_dir = ".";
  int threads = 1;
  bool svg = false;
};

/// Thrown on unknown keys, missing required keys, or malformed values;
/// run() maps it to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Merge `key=value` tokens into cfg.args; `command` is taken from the first
/// bare token. Unknown syntax raises ConfigError.
void apply_kv_args(SweepConfig& cfg, const std::vector<std::string>& tokens);

/// Sectioned INI-style file: section headers group keys, `#` comments.
/// A `command` key selects the command if none was given on the CLI.
void apply_config_file(SweepConfig& cfg, const std::string& path);

/// Inclusive numeric range "start:stop:step", or a single value.
std::vector<double> parse_range(const std::string& text);

MovingDomainSpec spec_from_args(const std::map<std::string, std::string>& args);

/// Executes the command, writes CSV/SVG artifacts under cfg.out_dir, and logs
/// to `log`. Exit 0 on success, 1 if a check verdict is violated, 2 on
/// config errors.
int run(const SweepConfig& cfg, std::ostream& log);

}  // namespace tgcc

#endif
