#ifndef CYCLOSVP_CLI_HPP
#define CYCLOSVP_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cyclosvp {

struct CliConfig {
  /// classify, pell, sqrtmod, lambda1, shortest, bounds, verify or table.
  std::string command;
  std::optional<std::string> p;
  std::optional<std::string> pmax;
  /// Tower level; defaults to the class minimum.
  std::optional<int> n;
  std::optional<std::string> ring;
  int sign = 1;
  /// Radicand for sqrtmod.
  std::string a = "2";
  std::string format = "json";
  bool enumerate_fallback = false;
  int jobs = 1;
  std::optional<std::string> norm_bound;
  /// Table classes such as "9mod16"; unset means every covered class.
  std::optional<std::vector<std::string>> classes;
};

/// Executes one command. Exit codes: 0 success, 2 domain error, 1 internal
/// consistency failure (including failed verification reports). Errors are
/// written to `out` as a single-line JSON object.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and calls run.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclosvp

#endif  // CYCLOSVP_CLI_HPP
