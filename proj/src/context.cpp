#include "ddic/context.hpp"

#include <algorithm>

#include "ddic/error.hpp"

namespace ddic {

struct ContextFormula::Node {
  Kind kind = Kind::Top;
  std::string name;
  std::vector<ContextFormula> children;
};

namespace {

int precedence(ContextFormula::Kind k) {
  switch (k) {
    case ContextFormula::Kind::Implies: return 1;
    case ContextFormula::Kind::Or: return 2;
    case ContextFormula::Kind::And: return 3;
    case ContextFormula::Kind::Not: return 4;
    default: return 5;
  }
}

void render(const ContextFormula& f, std::string& out) {
  using K = ContextFormula::Kind;
  auto child = [&out](const ContextFormula& c, bool wrap) {
    if (wrap) out += '(';
    render(c, out);
    if (wrap) out += ')';
  };
  const int p = precedence(f.kind());
  switch (f.kind()) {
    case K::Top: out += "true"; break;
    case K::Atom: out += f.name(); break;
    case K::Not:
      out += '!';
      child(f.lhs(), precedence(f.lhs().kind()) < p);
      break;
    case K::And:
    case K::Or:
      // Left-associative: only the right operand needs parens at equal level.
      child(f.lhs(), precedence(f.lhs().kind()) < p);
      out += f.kind() == K::And ? " & " : " | ";
      child(f.rhs(), precedence(f.rhs().kind()) <= p);
      break;
    case K::Implies:
      child(f.lhs(), precedence(f.lhs().kind()) <= p);
      out += " -> ";
      child(f.rhs(), precedence(f.rhs().kind()) < p);
      break;
  }
}

void collect_atoms(const ContextFormula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case ContextFormula::Kind::Top: return;
    case ContextFormula::Kind::Atom: out.push_back(f.name()); return;
    case ContextFormula::Kind::Not: collect_atoms(f.lhs(), out); return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

// Bit pattern of atom `index` within word `word` of a truth table.
std::uint64_t atom_word(std::size_t index, std::size_t word) {
  static constexpr std::uint64_t kLow[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  if (index < 6) return kLow[index];
  return ((word >> (index - 6)) & 1u) ? ~0ull : 0ull;
}

std::vector<std::uint64_t> evaluate(const ContextVocabulary& vocab, const ContextFormula& f,
                                    std::size_t words) {
  using K = ContextFormula::Kind;
  std::vector<std::uint64_t> out(words);
  switch (f.kind()) {
    case K::Top:
      std::fill(out.begin(), out.end(), ~0ull);
      break;
    case K::Atom: {
      const auto index = vocab.index_of(f.name());
      if (!index) throw DeclarationError("undeclared context atom '" + f.name() + "'");
      for (std::size_t w = 0; w < words; ++w) out[w] = atom_word(*index, w);
      break;
    }
    case K::Not: {
      out = evaluate(vocab, f.lhs(), words);
      for (auto& w : out) w = ~w;
      break;
    }
    default: {
      out = evaluate(vocab, f.lhs(), words);
      const auto rhs = evaluate(vocab, f.rhs(), words);
      for (std::size_t w = 0; w < words; ++w) {
        if (f.kind() == K::And) out[w] &= rhs[w];
        else if (f.kind() == K::Or) out[w] |= rhs[w];
        else out[w] = ~out[w] | rhs[w];
      }
    }
  }
  return out;
}

}  // namespace

ContextFormula::ContextFormula() {
  static const auto top = std::make_shared<const Node>();
  node_ = top;
}
ContextFormula::ContextFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

ContextFormula ContextFormula::top() { return ContextFormula(); }

ContextFormula ContextFormula::atom(std::string name) {
  return ContextFormula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}

ContextFormula ContextFormula::negation(ContextFormula operand) {
  return ContextFormula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(operand)}}));
}

ContextFormula ContextFormula::conjunction(ContextFormula lhs, ContextFormula rhs) {
  return ContextFormula(std::make_shared<const Node>(Node{Kind::And, {}, {std::move(lhs), std::move(rhs)}}));
}

ContextFormula ContextFormula::disjunction(ContextFormula lhs, ContextFormula rhs) {
  return ContextFormula(std::make_shared<const Node>(Node{Kind::Or, {}, {std::move(lhs), std::move(rhs)}}));
}

ContextFormula ContextFormula::implication(ContextFormula lhs, ContextFormula rhs) {
  return ContextFormula(
      std::make_shared<const Node>(Node{Kind::Implies, {}, {std::move(lhs), std::move(rhs)}}));
}

ContextFormula::Kind ContextFormula::kind() const { return node_->kind; }
const std::string& ContextFormula::name() const { return node_->name; }

const ContextFormula& ContextFormula::lhs() const {
  static const ContextFormula leaf;
  return node_->children.empty() ? leaf : node_->children.front();
}

const ContextFormula& ContextFormula::rhs() const {
  static const ContextFormula leaf;
  return node_->children.size() < 2 ? leaf : node_->children.back();
}

std::vector<std::string> ContextFormula::atoms() const {
  std::vector<std::string> out;
  collect_atoms(*this, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool operator==(const ContextFormula& a, const ContextFormula& b) { return compare(a, b) == 0; }

int compare(const ContextFormula& a, const ContextFormula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case ContextFormula::Kind::Top: return 0;
    case ContextFormula::Kind::Atom: {
      const int c = a.name().compare(b.name());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case ContextFormula::Kind::Not: return compare(a.lhs(), b.lhs());
    default:
      if (const int c = compare(a.lhs(), b.lhs()); c != 0) return c;
      return compare(a.rhs(), b.rhs());
  }
}

std::string to_string(const ContextFormula& f) {
  std::string out;
  render(f, out);
  return out;
}

void ContextVocabulary::declare(std::string_view name) {
  if (contains(name)) throw DeclarationError("context atom '" + std::string(name) + "' declared twice");
  if (names_.size() >= kMaxContextAtoms) {
    throw DeclarationError("at most " + std::to_string(kMaxContextAtoms) + " context atoms may be declared");
  }
  names_.emplace_back(name);
}

bool ContextVocabulary::contains(std::string_view name) const { return index_of(name).has_value(); }

std::optional<std::size_t> ContextVocabulary::index_of(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

void ContextVocabulary::validate(const ContextFormula& f) const {
  for (const auto& name : f.atoms()) {
    if (!contains(name)) throw DeclarationError("undeclared context atom '" + name + "'");
  }
}

TruthTable::TruthTable(std::size_t atoms, std::vector<std::uint64_t> words)
    : atoms_(atoms), words_(std::move(words)) {
  // Rows beyond 2^atoms do not exist when the table fits in one word.
  if (atoms_ < 6) words_[0] &= (1ull << (1u << atoms_)) - 1;
}

TruthTable::TruthTable(const ContextVocabulary& vocab, const ContextFormula& f)
    : TruthTable(build(vocab, f)) {}

TruthTable TruthTable::build(const ContextVocabulary& vocab, const ContextFormula& f) {
  const std::size_t n = vocab.size();
  const std::size_t words = n <= 6 ? 1 : (std::size_t{1} << (n - 6));
  return TruthTable(n, evaluate(vocab, f, words));
}

bool TruthTable::subset_of(const TruthTable& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

bool TruthTable::intersects(const TruthTable& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & other.words_[w]) return true;
  }
  return false;
}

bool TruthTable::satisfiable() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

bool entails_ctx(const ContextVocabulary& vocab, const ContextFormula& premise,
                 const ContextFormula& conclusion) {
  return TruthTable(vocab, premise).subset_of(TruthTable(vocab, conclusion));
}

bool consistent(const ContextVocabulary& vocab, const ContextFormula& a, const ContextFormula& b) {
  return TruthTable(vocab, a).intersects(TruthTable(vocab, b));
}

ContextFormula conjoin(const ContextVocabulary& vocab, const ContextFormula& a,
                       const ContextFormula& b) {
  vocab.validate(a);
  vocab.validate(b);
  return ContextFormula::conjunction(a, b);
}

}  // namespace ddic
