#include "ddic/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "ddic/dsl.hpp"
#include "ddic/error.hpp"

namespace ddic::cli {

using nlohmann::json;

namespace {

const char* polarity_name(Polarity p) { return p == Polarity::Positive ? "positive" : "negative"; }

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json error_json(const std::string& kind, const std::string& message) {
  return json{{"kind", kind}, {"message", message}};
}

json parse_error_json(const dsl::ParseError& e) {
  auto j = error_json("parse", e.what());
  j["line"] = e.line();
  j["column"] = e.column();
  j["expected"] = e.expected();
  j["found"] = e.found();
  return j;
}

json envelope(const std::string& command, const std::string& file) {
  return json{{"schema", kSchemaVersion}, {"command", command}, {"file", file}};
}

// derive_beliefs results shared by every line asking about the same
// (context, time).
class Evaluator {
 public:
  explicit Evaluator(const NormStore& store) : store_(store) {}

  const StatusReport& report(const std::string& behavior, const ContextFormula& ctx, Time time) {
    const auto id = store_.ontology().id(behavior);
    auto key = std::make_pair(to_string(ctx), time);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(std::move(key), derive_beliefs(store_, ctx, time)).first;
    return it->second[id.value];
  }

 private:
  const NormStore& store_;
  std::map<std::pair<std::string, Time>, std::vector<StatusReport>> cache_;
};

bool holds(const dsl::ExpectLine& e, const StatusReport& report) {
  bool found = false;
  for (const auto& b : report.beliefs) found |= b.polarity == e.polarity && b.modal == e.modal;
  return found == e.present;
}

std::string query_result_line(const dsl::QueryLine& q, const StatusReport& report) {
  return dsl::format_line(q) + ": " + to_string(report.label);
}

std::string expect_result_line(const dsl::ExpectLine& e, bool ok) {
  return std::string(ok ? "ok   " : "FAIL ") + "line " + std::to_string(e.line) + ": " + dsl::format_line(e);
}

void print_trace(const DerivationTrace& trace, const Ontology& ont, std::ostream& out) {
  out << "  " << (trace.blocked ? "blocked " : "derived ") << to_string(trace.conclusion, ont) << "\n";
  for (const auto& app : trace.applications) {
    out << "    " << to_string(app.rule) << " from ";
    for (std::size_t i = 0; i < app.premises.size(); ++i) {
      out << (i ? ", " : "") << to_string(app.premises[i], ont);
    }
    if (!app.side_conditions.empty()) {
      out << " [";
      for (std::size_t i = 0; i < app.side_conditions.size(); ++i) out << (i ? "; " : "") << app.side_conditions[i];
      out << "]";
    }
    out << "\n";
  }
  for (const auto& d : trace.defeats) {
    out << "    defeated: " << to_string(d.rule) << " justification " << d.justification << " by "
        << to_string(d.defeater, ont) << " via " << path_string(d.path, ont) << " within " << d.window.stated
        << " <= " << d.window.defeater << " <= " << d.window.query << "\n";
  }
}

void print_report(const StatusReport& report, const Ontology& ont, bool trace, std::ostream& out) {
  out << ont.name(report.behavior) << " given " << to_string(report.context) << " at " << report.time << ": "
      << to_string(report.label) << "\n";
  out << "beliefs:\n";
  if (report.beliefs.empty()) out << "  (none)\n";
  for (const auto& b : report.beliefs) out << "  " << to_string(b, ont) << "\n";
  if (trace) {
    out << "traces:\n";
    if (report.traces.empty()) out << "  (none)\n";
    for (const auto& t : report.traces) print_trace(t, ont, out);
  }
  for (const auto& d : report.diagnostics) out << "diagnostic: " << d << "\n";
}

void print_conflict(const ConflictReport& c, const Ontology& ont, std::ostream& out) {
  out << to_string(c.kind) << " conflict at " << ont.name(c.shared_behavior) << " given "
      << to_string(c.shared_context) << ": " << to_string(c.first, ont) << " vs " << to_string(c.second, ont)
      << (c.genuine ? " [genuine]" : " [not genuine]") << "\n";
  out << "  " << c.note << "\n";
}

struct Loaded {
  dsl::Script script;
  NormStore store;
};

// Parses and builds; on failure reports and returns nullopt.
std::optional<Loaded> load(std::string_view text, const std::string& name, const std::string& command, bool as_json,
                           std::ostream& out) {
  try {
    auto script = dsl::parse_script(text);
    auto store = dsl::build_store(script);
    return Loaded{std::move(script), std::move(store)};
  } catch (const dsl::ParseError& e) {
    if (as_json) {
      auto j = envelope(command, name);
      j["error"] = parse_error_json(e);
      j["exit_code"] = kInputError;
      out << j.dump(2) << "\n";
    } else {
      out << name << ":" << e.what() << "\n";
    }
  } catch (const DeclarationError& e) {
    if (as_json) {
      auto j = envelope(command, name);
      j["error"] = error_json("declaration", e.what());
      j["exit_code"] = kInputError;
      out << j.dump(2) << "\n";
    } else {
      out << name << ": " << e.what() << "\n";
    }
  }
  return std::nullopt;
}

}  // namespace

json to_json(const TestimonyAtom& atom, const Ontology& ont) {
  return json{{"polarity", polarity_name(atom.polarity)},
              {"modal", to_string(atom.modal)},
              {"behavior", ont.name(atom.behavior)},
              {"context", to_string(atom.context)},
              {"time", atom.time},
              {"origin", atom.origin == Origin::Stated ? "stated" : "derived"},
              {"text", to_string(atom, ont)}};
}

json to_json(const BeliefAtom& atom, const Ontology& ont) {
  return json{{"polarity", polarity_name(atom.polarity)},
              {"modal", to_string(atom.modal)},
              {"behavior", ont.name(atom.behavior)},
              {"context", to_string(atom.context)},
              {"time", atom.time},
              {"text", to_string(atom, ont)}};
}

json to_json(const DerivationTrace& trace, const Ontology& ont) {
  json applications = json::array();
  for (const auto& app : trace.applications) {
    json premises = json::array();
    for (const auto& p : app.premises) {
      premises.push_back(std::visit([&ont](const auto& atom) { return to_json(atom, ont); }, p));
    }
    applications.push_back(
        json{{"rule", to_string(app.rule)}, {"premises", premises}, {"side_conditions", app.side_conditions}});
  }
  json defeats = json::array();
  for (const auto& d : trace.defeats) {
    json path = json::array();
    for (const auto id : d.path) path.push_back(ont.name(id));
    defeats.push_back(json{{"rule", to_string(d.rule)},
                           {"justification", d.justification},
                           {"stated", to_json(d.stated, ont)},
                           {"defeater", to_json(d.defeater, ont)},
                           {"path", path},
                           {"window", json{{"stated", d.window.stated},
                                           {"defeater", d.window.defeater},
                                           {"query", d.window.query}}}});
  }
  return json{{"conclusion", to_json(trace.conclusion, ont)},
              {"status", trace.blocked ? "blocked" : "derived"},
              {"applications", applications},
              {"defeats", defeats}};
}

json to_json(const StatusReport& report, const Ontology& ont) {
  json beliefs = json::array();
  for (const auto& b : report.beliefs) beliefs.push_back(to_json(b, ont));
  json traces = json::array();
  for (const auto& t : report.traces) traces.push_back(to_json(t, ont));
  return json{{"behavior", ont.name(report.behavior)},
              {"context", to_string(report.context)},
              {"time", report.time},
              {"label", to_string(report.label)},
              {"beliefs", beliefs},
              {"traces", traces},
              {"diagnostics", report.diagnostics}};
}

json to_json(const ConflictReport& c, const Ontology& ont) {
  return json{{"kind", to_string(c.kind)},
              {"first", to_json(c.first, ont)},
              {"second", to_json(c.second, ont)},
              {"shared_behavior", ont.name(c.shared_behavior)},
              {"shared_context", to_string(c.shared_context)},
              {"genuine", c.genuine},
              {"note", c.note}};
}

int check_text(std::string_view text, const std::string& name, const CheckOptions& options, std::ostream& out) {
  auto loaded = load(text, name, "check", options.json, out);
  if (!loaded) return kInputError;
  const auto& [script, store] = *loaded;
  const auto& ont = store.ontology();
  Evaluator eval(store);

  json queries = json::array();
  json expectations = json::array();
  std::ostringstream human;
  human << name << "\n";
  for (const auto& q : script.queries) {
    const auto& report = eval.report(q.behavior, q.context, q.time);
    human << query_result_line(q, report) << "\n";
    auto j = to_json(report, ont);
    j["line"] = q.line;
    j["text"] = dsl::format_line(q);
    queries.push_back(std::move(j));
  }
  int passed = 0;
  int failed = 0;
  for (const auto& e : script.expectations) {
    const bool ok = holds(e, eval.report(e.behavior, e.context, e.time));
    (ok ? passed : failed) += 1;
    human << expect_result_line(e, ok) << "\n";
    expectations.push_back(json{{"line", e.line}, {"text", dsl::format_line(e)}, {"holds", ok}});
  }
  const auto diagnostics = store_diagnostics(store);
  for (const auto& d : diagnostics) human << "diagnostic: " << d << "\n";
  const auto total = script.expectations.size();
  human << total << (total == 1 ? " expectation: " : " expectations: ") << passed << " passed, " << failed
        << " failed\n";

  int code = kSuccess;
  if (options.strict && !diagnostics.empty()) code = kStrictDiagnostic;
  else if (failed > 0) code = kExpectationFailed;

  if (options.json) {
    json conflicts = json::array();
    for (const auto& c : scan_conflicts(store)) conflicts.push_back(to_json(c, ont));
    auto j = envelope("check", name);
    j["queries"] = queries;
    j["expectations"] = expectations;
    j["conflicts"] = conflicts;
    j["diagnostics"] = diagnostics;
    j["passed"] = passed;
    j["failed"] = failed;
    j["exit_code"] = code;
    out << j.dump(2) << "\n";
  } else {
    out << human.str();
  }
  return code;
}

int cmd_check(const std::string& path, const CheckOptions& options, std::ostream& out, std::ostream& err) {
  const auto text = read_file(path);
  if (!text) {
    err << "ddic: cannot read " << path << "\n";
    return kInputError;
  }
  return check_text(*text, path, options, out);
}

int cmd_query(const std::string& path, const QueryOptions& options, std::ostream& out, std::ostream& err) {
  const auto text = read_file(path);
  if (!text) {
    err << "ddic: cannot read " << path << "\n";
    return kInputError;
  }
  auto loaded = load(*text, path, "query", options.json, out);
  if (!loaded) return kInputError;
  const auto& store = loaded->store;
  const auto& ont = store.ontology();
  try {
    const auto behavior = ont.id(options.behavior);
    const auto ctx = dsl::parse_context(options.context);
    const auto report = query_status(store, behavior, ctx, options.time);
    if (options.json) {
      auto j = envelope("query", path);
      j.update(to_json(report, ont));
      out << j.dump(2) << "\n";
    } else {
      print_report(report, ont, options.trace, out);
    }
    return kSuccess;
  } catch (const dsl::ParseError& e) {
    if (options.json) {
      auto j = envelope("query", path);
      j["error"] = parse_error_json(e);
      j["exit_code"] = kInputError;
      out << j.dump(2) << "\n";
    } else {
      err << "ddic: context: " << e.what() << "\n";
    }
  } catch (const DeclarationError& e) {
    if (options.json) {
      auto j = envelope("query", path);
      j["error"] = error_json("declaration", e.what());
      j["exit_code"] = kInputError;
      out << j.dump(2) << "\n";
    } else {
      err << "ddic: " << e.what() << "\n";
    }
  }
  return kInputError;
}

int cmd_conflicts(const std::string& path, bool as_json, std::ostream& out, std::ostream& err) {
  const auto text = read_file(path);
  if (!text) {
    err << "ddic: cannot read " << path << "\n";
    return kInputError;
  }
  auto loaded = load(*text, path, "conflicts", as_json, out);
  if (!loaded) return kInputError;
  const auto& store = loaded->store;
  const auto reports = scan_conflicts(store);
  if (as_json) {
    json conflicts = json::array();
    for (const auto& c : reports) conflicts.push_back(to_json(c, store.ontology()));
    auto j = envelope("conflicts", path);
    j["conflicts"] = conflicts;
    out << j.dump(2) << "\n";
    return kSuccess;
  }
  if (reports.empty()) out << "no conflicts\n";
  for (const auto& c : reports) print_conflict(c, store.ontology(), out);
  return kSuccess;
}

int cmd_repl(const std::optional<std::string>& seed_path, std::istream& in, std::ostream& out, std::ostream& err) {
  std::string accepted;
  if (seed_path) {
    const auto text = read_file(*seed_path);
    if (!text) {
      err << "ddic: cannot read " << *seed_path << "\n";
      return kInputError;
    }
    try {
      dsl::build_store(dsl::parse_script(*text));
    } catch (const std::exception& e) {
      err << *seed_path << ": " << e.what() << "\n";
      return kInputError;
    }
    accepted = *text;
    if (!accepted.empty() && accepted.back() != '\n') accepted += '\n';
  }

  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    const std::string_view body = first == std::string::npos ? std::string_view{} : std::string_view(line).substr(first);
    if (body == "quit") return kSuccess;

    if (body.starts_with("status") && (body.size() == 6 || body[6] == ' ' || body[6] == '\t')) {
      try {
        const auto rest = body.substr(6);
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos) throw dsl::ParseError(1, static_cast<int>(first + 7 + rest.size()), "','", "end of line");
        auto name = std::string(rest.substr(0, comma));
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        const auto ctx = dsl::parse_context(rest.substr(comma + 1));
        const auto store = dsl::build_store(dsl::parse_script(accepted));
        const auto report = query_status(store, store.ontology().id(name), ctx);
        out << to_string(report.label) << "\n";
      } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
      }
      continue;
    }

    const std::string candidate = accepted + line + "\n";
    dsl::Script before;
    dsl::Script after;
    NormStore store;
    try {
      before = dsl::parse_script(accepted);
      after = dsl::parse_script(candidate);
      store = dsl::build_store(after);
    } catch (const dsl::ParseError& e) {
      out << "error: column " << e.column() << ": expected " << e.expected() << ", found " << e.found() << "\n";
      continue;
    } catch (const std::exception& e) {
      out << "error: " << e.what() << "\n";
      continue;
    }
    accepted = candidate;
    Evaluator eval(store);
    if (after.queries.size() > before.queries.size()) {
      const auto& q = after.queries.back();
      out << query_result_line(q, eval.report(q.behavior, q.context, q.time)) << "\n";
    } else if (after.expectations.size() > before.expectations.size()) {
      const auto& e = after.expectations.back();
      out << expect_result_line(e, holds(e, eval.report(e.behavior, e.context, e.time))) << "\n";
    }
  }
  return kSuccess;
}

}  // namespace ddic::cli
