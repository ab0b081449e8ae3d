#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dendrix {

enum class CommandKind { magnus, fer, solve, trees, verify };

struct Command {
  CommandKind kind = CommandKind::magnus;
  std::optional<int> order;  // per-model default when absent
  std::string model = "free:1";
  bool model_given = false;
  std::string form = "left";
  std::string format = "text";
  std::uint64_t seed = 1;
  int trials = 1;
  bool parallel_trials = false;
  std::string equation;  // solve: JSON equation file
  std::string output;    // empty: stdout
  int max_order = 10;    // trees
  bool counts = false;
  bool table = false;
  std::string check;
};

// Throws UsageError; a help request yields an empty optional with the help
// text written to help.
std::optional<Command> parse_args(const std::vector<std::string>& args, std::string& help);

// Exit codes: 0 success, 1 computational or verification failure.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

// parse_args + run with the usage error mapped to exit code 2.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dendrix
