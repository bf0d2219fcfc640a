// ddic: check, query and explore defeasible deontic norm scripts.

#include <iostream>

#include <CLI11.hpp>

#include "ddic/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Defeasible deontic inheritance reasoner for .ddic scripts"};
  app.require_subcommand(1);

  std::string path;
  ddic::cli::CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate every query and expectation in a script");
  check_cmd->add_option("file", path, "Script to check")->required();
  check_cmd->add_flag("--strict", check.strict, "Fail (exit 3) on simultaneous contradictory testimony");
  check_cmd->add_flag("--json", check.json, "Emit a JSON report");

  ddic::cli::QueryOptions query;
  std::optional<ddic::Time> positional_time;
  std::optional<ddic::Time> at_time;
  auto* query_cmd = app.add_subcommand("query", "Report the deontic status of one behavior");
  query_cmd->add_option("file", path, "Script providing ontology and testimony")->required();
  query_cmd->add_option("behavior", query.behavior, "Action name")->required();
  query_cmd->add_option("context", query.context, "Query context formula (default: true)");
  query_cmd->add_option("time", positional_time, "Query time (default: latest testimony)");
  query_cmd->add_option("--at", at_time, "Query time (default: latest testimony)");
  query_cmd->add_flag("--trace", query.trace, "Show every rule attempt and defeat");
  query_cmd->add_flag("--json", query.json, "Emit a JSON report");

  bool conflicts_json = false;
  auto* conflicts_cmd = app.add_subcommand("conflicts", "List conflicting pairs of stated norms");
  conflicts_cmd->add_option("file", path, "Script to scan")->required();
  conflicts_cmd->add_flag("--json", conflicts_json, "Emit a JSON report");

  std::optional<std::string> seed;
  auto* repl_cmd = app.add_subcommand("repl", "Interactive session over stdin");
  repl_cmd->add_option("file", seed, "Optional seed script");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ddic::cli::kInputError;
  }

  if (*check_cmd) return ddic::cli::cmd_check(path, check, std::cout, std::cerr);
  if (*query_cmd) {
    if (positional_time && at_time && *positional_time != *at_time) {
      std::cerr << "ddic: conflicting query times " << *positional_time << " and --at " << *at_time << "\n";
      return ddic::cli::kInputError;
    }
    query.time = at_time ? at_time : positional_time;
    return ddic::cli::cmd_query(path, query, std::cout, std::cerr);
  }
  if (*conflicts_cmd) return ddic::cli::cmd_conflicts(path, conflicts_json, std::cout, std::cerr);
  return ddic::cli::cmd_repl(seed, std::cin, std::cout, std::cerr);
}
