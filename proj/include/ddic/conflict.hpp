#pragma once

// Pairwise classification of stated norms into direct, indirect and
// intersecting conflicts, with a flag separating genuine deontic conflicts
// from pairs that inheritance already reconciles.

#include <optional>
#include <string>
#include <vector>

#include "ddic/model.hpp"
#include "ddic/store.hpp"

namespace ddic {

enum class ConflictKind : std::uint8_t { Direct, Indirect, Intersecting };

const char* to_string(ConflictKind kind);

struct ConflictReport {
  ConflictKind kind = ConflictKind::Direct;
  /// Earlier atom first; equal times keep argument order.
  TestimonyAtom first;
  TestimonyAtom second;
  ActionId shared_behavior;
  /// `first.context & second.context`, always satisfiable.
  ContextFormula shared_context;
  /// False when inheritance alone settles the shared grounds whatever the
  /// temporal order.
  bool genuine = true;
  std::string note;
};

/// Nullopt for same-modal pairs, jointly unsatisfiable contexts, or disjoint
/// behaviors. Throws DeclarationError on undeclared references and
/// ContractError for negative atoms.
std::optional<ConflictReport> classify_pair(const Ontology& ont, const ContextVocabulary& vocab,
                                            const TestimonyAtom& a, const TestimonyAtom& b);

/// Every unordered pair of stated atoms, ordered by (earlier time, later
/// time, shared behavior name).
std::vector<ConflictReport> scan_conflicts(const NormStore& store);

}  // namespace ddic
