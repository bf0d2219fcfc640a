#pragma once

// Command implementations behind the `ddic` executable. Each command writes
// to the given streams and returns its process exit code.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ddic/conflict.hpp"
#include "ddic/engine.hpp"

namespace ddic::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kSuccess = 0,
  kExpectationFailed = 1,
  kInputError = 2,
  kStrictDiagnostic = 3,
};

struct CheckOptions {
  bool strict = false;
  bool json = false;
};

struct QueryOptions {
  std::string behavior;
  std::string context = "true";
  std::optional<Time> time;
  bool trace = false;
  bool json = false;
};

/// Runs every query and expectation of a script. `name` labels the report.
int check_text(std::string_view text, const std::string& name, const CheckOptions& options,
               std::ostream& out);
int cmd_check(const std::string& path, const CheckOptions& options, std::ostream& out, std::ostream& err);

int cmd_query(const std::string& path, const QueryOptions& options, std::ostream& out, std::ostream& err);

int cmd_conflicts(const std::string& path, bool json, std::ostream& out, std::ostream& err);

/// Line-oriented session: script lines plus `status <ID>, <ctx>` and
/// `quit`. Malformed lines are reported and skipped.
int cmd_repl(const std::optional<std::string>& seed_path, std::istream& in, std::ostream& out,
             std::ostream& err);

nlohmann::json to_json(const TestimonyAtom& atom, const Ontology& ont);
nlohmann::json to_json(const BeliefAtom& atom, const Ontology& ont);
nlohmann::json to_json(const DerivationTrace& trace, const Ontology& ont);
nlohmann::json to_json(const StatusReport& report, const Ontology& ont);
nlohmann::json to_json(const ConflictReport& report, const Ontology& ont);

}  // namespace ddic::cli
