#pragma once

// Propositional context language: formulas over named context atoms, decided
// by exhaustive truth tables over the declared vocabulary.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ddic {

/// Hard cap on declared context atoms (2^16 truth-table rows).
inline constexpr std::size_t kMaxContextAtoms = 16;

/// Immutable formula tree. Leaves name context atoms; resolution against a
/// vocabulary happens at decision time.
class ContextFormula {
 public:
  enum class Kind : std::uint8_t { Top, Atom, Not, And, Or, Implies };

  /// Defaults to Top.
  ContextFormula();

  static ContextFormula top();
  static ContextFormula atom(std::string name);
  static ContextFormula negation(ContextFormula operand);
  static ContextFormula conjunction(ContextFormula lhs, ContextFormula rhs);
  static ContextFormula disjunction(ContextFormula lhs, ContextFormula rhs);
  static ContextFormula implication(ContextFormula lhs, ContextFormula rhs);

  Kind kind() const;
  /// Atom name; empty for non-atoms.
  const std::string& name() const;
  /// Operand of Not, left side of binary nodes.
  const ContextFormula& lhs() const;
  const ContextFormula& rhs() const;

  /// Distinct atom names, sorted.
  std::vector<std::string> atoms() const;

  /// Structural equality; `(a)` and `a` are the same tree.
  friend bool operator==(const ContextFormula& a, const ContextFormula& b);

  /// Total structural order, used to key sets of atoms.
  friend int compare(const ContextFormula& a, const ContextFormula& b);

 private:
  struct Node;
  explicit ContextFormula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Precedence-aware rendering in the `.ddic` surface syntax:
/// `!` binds tightest, then `&`, `|`, and right-associative `->`.
std::string to_string(const ContextFormula& f);

/// Declared context propositions, in declaration order.
class ContextVocabulary {
 public:
  /// Throws DeclarationError on duplicates or when the cap is exceeded.
  void declare(std::string_view name);

  bool contains(std::string_view name) const;
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  /// Throws DeclarationError naming the first undeclared atom in `f`.
  void validate(const ContextFormula& f) const;

 private:
  std::vector<std::string> names_;
};

/// The set of satisfying rows of a formula, one bit per assignment. Row r
/// assigns atom i the value of bit i of r.
class TruthTable {
 public:
  TruthTable(const ContextVocabulary& vocab, const ContextFormula& f);

  /// Every satisfying row of this table also satisfies `other`.
  bool subset_of(const TruthTable& other) const;
  bool intersects(const TruthTable& other) const;
  bool satisfiable() const;

 private:
  TruthTable(std::size_t atoms, std::vector<std::uint64_t> words);
  static TruthTable build(const ContextVocabulary& vocab, const ContextFormula& f);

  std::size_t atoms_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Classical consequence: every assignment satisfying `premise` satisfies
/// `conclusion`. Throws DeclarationError on undeclared atoms.
bool entails_ctx(const ContextVocabulary& vocab, const ContextFormula& premise,
                 const ContextFormula& conclusion);

/// `a & b` is satisfiable.
bool consistent(const ContextVocabulary& vocab, const ContextFormula& a,
                const ContextFormula& b);

/// Validates both sides and returns `a & b`.
ContextFormula conjoin(const ContextVocabulary& vocab, const ContextFormula& a,
                       const ContextFormula& b);

}  // namespace ddic
