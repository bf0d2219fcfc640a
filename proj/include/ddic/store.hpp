#pragma once

#include <optional>
#include <vector>

#include "ddic/context.hpp"
#include "ddic/model.hpp"
#include "ddic/ontology.hpp"

namespace ddic {

/// Stated testimony over a fixed ontology and context vocabulary. Testimony
/// is kept sorted by time; equal times keep insertion order. Snapshots are
/// immutable; `assert_testimony` returns the next one.
class NormStore {
 public:
  NormStore() = default;
  NormStore(Ontology ontology, ContextVocabulary vocabulary);

  /// Throws DeclarationError if the behavior or a context atom is
  /// undeclared, ContractError for negative or derived atoms.
  [[nodiscard]] NormStore assert_testimony(TestimonyAtom atom) const;

  /// Convenience for positive stated atoms.
  [[nodiscard]] NormStore assert_testimony(Modal modal, ActionId behavior, ContextFormula context,
                                           Time time) const;

  const Ontology& ontology() const { return ontology_; }
  const ContextVocabulary& vocabulary() const { return vocabulary_; }
  const std::vector<TestimonyAtom>& testimony() const { return testimony_; }

  /// Latest stated time, or nullopt when nothing was said.
  std::optional<Time> max_time() const;

 private:
  Ontology ontology_;
  ContextVocabulary vocabulary_;
  std::vector<TestimonyAtom> testimony_;
};

}  // namespace ddic
