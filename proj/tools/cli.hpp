#ifndef ENDRANK_TOOLS_CLI_HPP
#define ENDRANK_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "endrank/ranks.hpp"

namespace endrank::cli {

enum class OutputFormat { text, json };

struct RunConfig {
  std::string                subcommand;
  std::optional<std::size_t> n;
  std::optional<std::string> table_path;
  OutputFormat               format         = OutputFormat::text;
  double                     budget_seconds = 60.0;
  RankSelection              which          = all_ranks;
  bool                       oracle         = false;
  std::optional<std::string> out_path;
};

enum class CheckStatus { pass, fail, skipped };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

// The checklist of claims behind `verify`.
std::vector<Check> claim_checklist(std::size_t n, Budget const& budget);

// Exit codes: 0 success or inconclusive, 1 usage/validation error,
// 2 conjecture refuted.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace endrank::cli

#endif  // ENDRANK_TOOLS_CLI_HPP
