#pragma once

// The `.ddic` script language.
//
//   script  := (line)* ;
//   line    := "action" ID | "entails" ID "->" ID | "context" ID
//            | "@" NAT ("obl"|"imp"|"opt") "(" ID "," ctx ")"
//            | "query" "@" NAT "(" ID "," ctx ")"
//            | "expect" ["not"] "@" NAT ["~"] ("Obl"|"Imp"|"Opt") "(" ID "," ctx ")" ;
//   ctx     := "true" | ID | "!" ctx | ctx "&" ctx | ctx "|" ctx
//            | ctx "->" ctx | "(" ctx ")" ;
//
// `#` starts a comment, one statement per line, identifiers match
// [A-Za-z][A-Za-z0-9_]*. Precedence is ! > & > | > ->, with -> right
// associative. `entails A -> B` makes A the more specific action.

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ddic/context.hpp"
#include "ddic/model.hpp"
#include "ddic/store.hpp"

namespace ddic::dsl {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string expected, std::string found);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  int line_;
  int column_;
  std::string expected_;
  std::string found_;
};

struct TestimonyLine {
  Time time = 0;
  Modal modal = Modal::Obl;
  std::string behavior;
  ContextFormula context;
  int line = 0;  // source line, not part of equality

  friend bool operator==(const TestimonyLine& a, const TestimonyLine& b) {
    return a.time == b.time && a.modal == b.modal && a.behavior == b.behavior && a.context == b.context;
  }
};

struct QueryLine {
  Time time = 0;
  std::string behavior;
  ContextFormula context;
  int line = 0;

  friend bool operator==(const QueryLine& a, const QueryLine& b) {
    return a.time == b.time && a.behavior == b.behavior && a.context == b.context;
  }
};

struct ExpectLine {
  bool present = true;
  Polarity polarity = Polarity::Positive;
  Modal modal = Modal::Obl;
  std::string behavior;
  ContextFormula context;
  Time time = 0;
  int line = 0;

  friend bool operator==(const ExpectLine& a, const ExpectLine& b) {
    return a.present == b.present && a.polarity == b.polarity && a.modal == b.modal &&
           a.behavior == b.behavior && a.context == b.context && a.time == b.time;
  }
};

/// A parsed script. Equality treats the declaration lists as sets and the
/// testimony as ordered by time (stable), matching what `format_script`
/// preserves; queries and expectations compare in order.
struct Script {
  std::vector<std::string> actions;
  std::vector<std::pair<std::string, std::string>> entailments;  // (specific, general)
  std::vector<std::string> contexts;
  std::vector<TestimonyLine> testimony;
  std::vector<QueryLine> queries;
  std::vector<ExpectLine> expectations;

  friend bool operator==(const Script& a, const Script& b);
};

/// Throws ParseError at the first offending token. Identifiers are
/// resolved after all declarations are read, so uses may precede them.
Script parse_script(std::string_view text);

/// Canonical text: sorted declarations, testimony by time, then queries
/// and expectations. Lines end with LF.
std::string format_script(const Script& script);

/// A standalone context formula (CLI arguments, REPL `status`).
ContextFormula parse_context(std::string_view text);

std::string format_line(const TestimonyLine& t);
std::string format_line(const QueryLine& q);
std::string format_line(const ExpectLine& e);

/// Builds the ontology, vocabulary and testimony. Throws DeclarationError
/// (CycleError for cyclic entailments).
NormStore build_store(const Script& script);

}  // namespace ddic::dsl
