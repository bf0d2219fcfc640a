#include "ddic/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "ddic/error.hpp"

namespace ddic::dsl {

namespace {

enum class Tok { Ident, Nat, At, LParen, RParen, Comma, Arrow, Bang, Amp, Pipe, Tilde, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int column = 1;
};

std::string describe(const Token& t) {
  return t.kind == Tok::End ? "end of line" : "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view line, int line_number) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const int column = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), column});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::Nat, std::string(line.substr(i, j - i)), column});
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", column});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '@': kind = Tok::At; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '!': kind = Tok::Bang; break;
      case '&': kind = Tok::Amp; break;
      case '|': kind = Tok::Pipe; break;
      case '~': kind = Tok::Tilde; break;
      default:
        throw ParseError(line_number, column, "token", "'" + std::string(1, c) + "'");
    }
    out.push_back({kind, std::string(1, c), column});
    ++i;
  }
  out.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
  // A trailing comment ends the line where it starts.
  if (const auto hash = line.find('#'); hash != std::string_view::npos && hash < line.size()) {
    out.back().column = static_cast<int>(hash) + 1;
  }
  return out;
}

struct Use {
  std::string name;
  bool action = true;
  int line = 0;
  int column = 0;
};

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line_number, std::vector<Use>& uses)
      : tokens_(std::move(tokens)), line_(line_number), uses_(uses) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_word(std::string_view word) const { return at(Tok::Ident) && peek().text == word; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(line_, peek().column, expected, describe(peek()));
  }

  const Token& expect(Tok kind, const std::string& expected) {
    if (!at(kind)) fail(expected);
    return next();
  }

  void expect_end() {
    if (!at(Tok::End)) fail("end of line");
  }

  std::string name(const std::string& expected, bool action) {
    if (!at(Tok::Ident) || (!action && peek().text == "true")) fail(expected);
    const auto& t = next();
    uses_.push_back({t.text, action, line_, t.column});
    return t.text;
  }

  std::string declared_name(const std::string& expected, bool action) {
    if (!at(Tok::Ident) || (!action && peek().text == "true")) fail(expected);
    return next().text;
  }

  Time nat() {
    if (!at(Tok::Nat)) fail("natural number");
    const auto& t = peek();
    Time value = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) fail("natural number below 2^64");
    next();
    return value;
  }

  // ctx := implies
  ContextFormula ctx() { return implies(); }

  // (behavior, ctx)
  std::pair<std::string, ContextFormula> arguments() {
    expect(Tok::LParen, "'('");
    auto behavior = name("action name", true);
    expect(Tok::Comma, "','");
    auto context = ctx();
    expect(Tok::RParen, "')'");
    return {std::move(behavior), std::move(context)};
  }

 private:
  ContextFormula implies() {
    auto lhs = disjunction();
    if (at(Tok::Arrow)) {
      next();
      return ContextFormula::implication(std::move(lhs), implies());
    }
    return lhs;
  }

  ContextFormula disjunction() {
    auto f = conjunction();
    while (at(Tok::Pipe)) {
      next();
      f = ContextFormula::disjunction(std::move(f), conjunction());
    }
    return f;
  }

  ContextFormula conjunction() {
    auto f = unary();
    while (at(Tok::Amp)) {
      next();
      f = ContextFormula::conjunction(std::move(f), unary());
    }
    return f;
  }

  ContextFormula unary() {
    if (at(Tok::Bang)) {
      next();
      return ContextFormula::negation(unary());
    }
    if (at(Tok::LParen)) {
      next();
      auto f = implies();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (at_word("true")) {
      next();
      return ContextFormula::top();
    }
    if (at(Tok::Ident)) return ContextFormula::atom(name("context formula", false));
    fail("context formula");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_;
  std::vector<Use>& uses_;
};

std::optional<Modal> modal_word(std::string_view word, bool belief) {
  if (word == (belief ? "Obl" : "obl")) return Modal::Obl;
  if (word == (belief ? "Imp" : "imp")) return Modal::Imp;
  if (word == (belief ? "Opt" : "opt")) return Modal::Opt;
  return std::nullopt;
}

const char* testimony_word(Modal m) {
  switch (m) {
    case Modal::Obl: return "obl";
    case Modal::Imp: return "imp";
    case Modal::Opt: return "opt";
  }
  return "?";
}

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<TestimonyLine> by_time(std::vector<TestimonyLine> v) {
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.time < b.time; });
  return v;
}

}  // namespace

ParseError::ParseError(int line, int column, std::string expected, std::string found)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": expected " + expected +
                         ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

bool operator==(const Script& a, const Script& b) {
  return sorted(a.actions) == sorted(b.actions) && sorted(a.entailments) == sorted(b.entailments) &&
         sorted(a.contexts) == sorted(b.contexts) && by_time(a.testimony) == by_time(b.testimony) &&
         a.queries == b.queries && a.expectations == b.expectations;
}

Script parse_script(std::string_view text) {
  Script script;
  std::vector<Use> uses;
  std::vector<std::string> action_names;
  std::vector<std::string> context_names;
  const auto declared = [](const std::vector<std::string>& names, const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };

  int line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_number;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;

    LineParser p(lex(line, line_number), line_number, uses);
    if (p.at(Tok::End)) continue;

    if (p.at(Tok::At)) {
      p.next();
      TestimonyLine t;
      t.line = line_number;
      t.time = p.nat();
      if (!p.at(Tok::Ident)) p.fail("'obl', 'imp' or 'opt'");
      const auto modal = modal_word(p.peek().text, false);
      if (!modal) p.fail("'obl', 'imp' or 'opt'");
      p.next();
      t.modal = *modal;
      std::tie(t.behavior, t.context) = p.arguments();
      p.expect_end();
      script.testimony.push_back(std::move(t));
    } else if (p.at_word("action")) {
      p.next();
      const auto column = p.peek().column;
      auto n = p.declared_name("action name", true);
      if (declared(action_names, n)) throw ParseError(line_number, column, "new action name", "'" + n + "'");
      p.expect_end();
      action_names.push_back(n);
      script.actions.push_back(std::move(n));
    } else if (p.at_word("context")) {
      p.next();
      const auto column = p.peek().column;
      auto n = p.declared_name("context name", false);
      if (declared(context_names, n)) throw ParseError(line_number, column, "new context name", "'" + n + "'");
      p.expect_end();
      context_names.push_back(n);
      script.contexts.push_back(std::move(n));
    } else if (p.at_word("entails")) {
      p.next();
      auto specific = p.name("action name", true);
      p.expect(Tok::Arrow, "'->'");
      auto general = p.name("action name", true);
      p.expect_end();
      script.entailments.emplace_back(std::move(specific), std::move(general));
    } else if (p.at_word("query")) {
      p.next();
      QueryLine q;
      q.line = line_number;
      p.expect(Tok::At, "'@'");
      q.time = p.nat();
      std::tie(q.behavior, q.context) = p.arguments();
      p.expect_end();
      script.queries.push_back(std::move(q));
    } else if (p.at_word("expect")) {
      p.next();
      ExpectLine e;
      e.line = line_number;
      if (p.at_word("not")) {
        p.next();
        e.present = false;
      }
      p.expect(Tok::At, "'@'");
      e.time = p.nat();
      if (p.at(Tok::Tilde)) {
        p.next();
        e.polarity = Polarity::Negative;
      }
      if (!p.at(Tok::Ident)) p.fail("'Obl', 'Imp' or 'Opt'");
      const auto modal = modal_word(p.peek().text, true);
      if (!modal) p.fail("'Obl', 'Imp' or 'Opt'");
      p.next();
      e.modal = *modal;
      std::tie(e.behavior, e.context) = p.arguments();
      p.expect_end();
      script.expectations.push_back(std::move(e));
    } else {
      p.fail("statement");
    }
  }

  for (const auto& use : uses) {
    const auto& names = use.action ? action_names : context_names;
    if (!declared(names, use.name)) {
      throw ParseError(use.line, use.column, use.action ? "declared action" : "declared context",
                       "'" + use.name + "'");
    }
  }
  return script;
}

ContextFormula parse_context(std::string_view text) {
  if (text.find('\n') != std::string_view::npos) throw ParseError(1, 1, "single-line context formula", "newline");
  std::vector<Use> uses;
  LineParser p(lex(text, 1), 1, uses);
  auto f = p.ctx();
  p.expect_end();
  return f;
}

std::string format_line(const TestimonyLine& t) {
  return "@" + std::to_string(t.time) + " " + testimony_word(t.modal) + "(" + t.behavior + ", " +
         to_string(t.context) + ")";
}

std::string format_line(const QueryLine& q) {
  return "query @" + std::to_string(q.time) + " (" + q.behavior + ", " + to_string(q.context) + ")";
}

std::string format_line(const ExpectLine& e) {
  return std::string("expect ") + (e.present ? "" : "not ") + "@" + std::to_string(e.time) + " " +
         (e.polarity == Polarity::Negative ? "~" : "") + to_string(e.modal) + "(" + e.behavior + ", " +
         to_string(e.context) + ")";
}

std::string format_script(const Script& script) {
  std::string out;
  for (const auto& a : sorted(script.actions)) out += "action " + a + "\n";
  for (const auto& [s, g] : sorted(script.entailments)) out += "entails " + s + " -> " + g + "\n";
  for (const auto& c : sorted(script.contexts)) out += "context " + c + "\n";
  for (const auto& t : by_time(script.testimony)) out += format_line(t) + "\n";
  for (const auto& q : script.queries) out += format_line(q) + "\n";
  for (const auto& e : script.expectations) out += format_line(e) + "\n";
  return out;
}

NormStore build_store(const Script& script) {
  Ontology ont;
  for (const auto& a : script.actions) ont = ont.add_action(a).first;
  for (const auto& [s, g] : script.entailments) ont = ont.add_entailment(ont.id(s), ont.id(g));
  ContextVocabulary vocab;
  for (const auto& c : script.contexts) vocab.declare(c);
  NormStore store(std::move(ont), std::move(vocab));
  for (const auto& t : script.testimony) {
    store = store.assert_testimony(t.modal, store.ontology().id(t.behavior), t.context, t.time);
  }
  return store;
}

}  // namespace ddic::dsl
