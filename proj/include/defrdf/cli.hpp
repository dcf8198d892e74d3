#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace defrdf::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kError = 2 };

struct CommandResult {
  int exit_code = kYes;
  std::string payload;      // stdout
  std::string diagnostics;  // stderr
};

struct CommandOptions {
  bool json = false;
  bool explain = false;
  std::optional<std::string> cache_path;
  std::string source_name = "<stdin>";
};

CommandResult cmd_closure(std::string_view text, const CommandOptions& opts);
CommandResult cmd_rank(std::string_view text, const CommandOptions& opts);
CommandResult cmd_entails(std::string_view text, std::string_view query,
                          const CommandOptions& opts);
CommandResult cmd_check(std::string_view text, const CommandOptions& opts);

}  // namespace defrdf::cli
