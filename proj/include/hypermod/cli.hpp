#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hypermod::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyFalse = 1,
  kUsage = 2,
  kInternal = 3,
};

/// Ordered key/value report. The human form prints "key: value", the
/// machine form "key=value"; both carry the same entries.
class Report {
 public:
  void add(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }
  [[nodiscard]] const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  void render(std::ostream& os, bool machine) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

struct CommandOutcome {
  int exit_code = kSuccess;
  Report report;
};

/// Runs one invocation; args excludes the program name. Reports go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypermod::cli
