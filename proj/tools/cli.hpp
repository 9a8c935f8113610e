#pragma once

// The lorder command line, callable in-process for golden tests.
//
// Exit codes:
//   0  success, or "yes" for a decision
//   1  "no" for a decision (iso, prefix, suffix, discrete, divide)
//   2  parse or validation error, message on stderr
//   3  indeterminate: a search bound or budget was exhausted

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace lorder::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kError = 2, kIndeterminate = 3 };

struct CliConfig {
  std::size_t search_depth = 8;
  std::size_t m_max = 4;
  std::size_t k_max = 64;
  std::size_t unroll = 8;
  std::size_t node_budget = 200000;
  bool json = false;
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lorder::cli
