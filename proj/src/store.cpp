#include "ddic/store.hpp"

#include <algorithm>

#include "ddic/error.hpp"

namespace ddic {

NormStore::NormStore(Ontology ontology, ContextVocabulary vocabulary)
    : ontology_(std::move(ontology)), vocabulary_(std::move(vocabulary)) {}

NormStore NormStore::assert_testimony(TestimonyAtom atom) const {
  if (atom.polarity != Polarity::Positive || atom.origin != Origin::Stated) {
    throw ContractError("only positive stated testimony can be asserted");
  }
  if (!ontology_.contains(atom.behavior)) {
    throw DeclarationError("testimony names unknown action id " + std::to_string(atom.behavior.value));
  }
  vocabulary_.validate(atom.context);
  NormStore next = *this;
  const auto pos = std::upper_bound(next.testimony_.begin(), next.testimony_.end(), atom.time,
                                    [](Time t, const TestimonyAtom& a) { return t < a.time; });
  next.testimony_.insert(pos, std::move(atom));
  return next;
}

NormStore NormStore::assert_testimony(Modal modal, ActionId behavior, ContextFormula context,
                                      Time time) const {
  return assert_testimony(
      TestimonyAtom{Polarity::Positive, modal, behavior, std::move(context), time, Origin::Stated});
}

std::optional<Time> NormStore::max_time() const {
  if (testimony_.empty()) return std::nullopt;
  return testimony_.back().time;
}

}  // namespace ddic
