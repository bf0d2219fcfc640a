#pragma once

// Staged inference over a norm store. Testimony is first closed under the
// deductive testimony axioms, then inherited along the ontology by the four
// defaults R1-R4 (each blocked by later or simultaneous testimony that
// negates its justification), and finally closed under the belief axioms.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ddic/model.hpp"
#include "ddic/store.hpp"

namespace ddic {

/// One testimony atom of the closure and how it got there.
struct ClosedEntry {
  TestimonyAtom atom;
  /// Nullopt for stated atoms.
  std::optional<RuleId> rule;
  /// Indices into ClosedTestimony::entries.
  std::vector<std::size_t> premises;
};

struct ClosedTestimony {
  /// Stated atoms first, in store order, then derived atoms.
  std::vector<ClosedEntry> entries;
  /// Index pairs {x, complement(x)}; kept, never exploded.
  std::vector<std::pair<std::size_t, std::size_t>> contradictions;

  std::optional<std::size_t> find(const TestimonyAtom& atom) const;
  bool contains(const TestimonyAtom& atom) const { return find(atom).has_value(); }
};

/// Fixpoint of D1a (both directions), D1b and its contrapositive over the
/// stated atoms with time <= `up_to` (all of them when unset).
ClosedTestimony close_testimony(const NormStore& store, std::optional<Time> up_to = std::nullopt);

struct Derived {
  BeliefAtom belief;
  DerivationTrace trace;
};
struct Defeated {
  DerivationTrace trace;
};
struct NotApplicable {
  std::string reason;
};
using RuleOutcome = std::variant<Derived, Defeated, NotApplicable>;

// Single default applications. `stated` must be an entry of `ct` with the
// rule's premise shape (positive Öbl for R1, negative Ïmp for R2, positive
// Ïmp for R3, negative Öbl for R4); ContractError otherwise.
RuleOutcome try_inherit_obl(const NormStore& store, const ClosedTestimony& ct,
                            const TestimonyAtom& stated, ActionId target,
                            const ContextFormula& delta, Time query_time);
RuleOutcome try_inherit_nonimp(const NormStore& store, const ClosedTestimony& ct,
                               const TestimonyAtom& stated, ActionId target,
                               const ContextFormula& delta, Time query_time);
RuleOutcome try_inherit_imp(const NormStore& store, const ClosedTestimony& ct,
                            const TestimonyAtom& stated, ActionId target,
                            const ContextFormula& delta, Time query_time);
RuleOutcome try_inherit_nonobl(const NormStore& store, const ClosedTestimony& ct,
                               const TestimonyAtom& stated, ActionId target,
                               const ContextFormula& delta, Time query_time);

struct StatusReport {
  ActionId behavior;
  ContextFormula context;
  Time time = 0;
  StatusLabel label = StatusLabel::Unknown;
  /// Sorted by (modal, polarity).
  std::vector<BeliefAtom> beliefs;
  /// Derived and blocked attempts concluding about `behavior`.
  std::vector<DerivationTrace> traces;
  std::vector<std::string> diagnostics;
};

struct EngineOptions {
  /// Shuffles the default-application order; results must not change.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Store-level warnings for testimony up to `up_to`: simultaneous
/// conflicting norms and complementary testimony pairs.
std::vector<std::string> store_diagnostics(const NormStore& store, std::optional<Time> up_to = std::nullopt);

/// One report per ontology node, indexed by ActionId::value.
std::vector<StatusReport> derive_beliefs(const NormStore& store, const ContextFormula& delta,
                                         Time query_time, const EngineOptions& options = {});

/// Report for one behavior. `query_time` defaults to the latest stated
/// time (0 for an empty store). Throws DeclarationError on undeclared
/// references.
StatusReport query_status(const NormStore& store, ActionId behavior, const ContextFormula& delta,
                          std::optional<Time> query_time = std::nullopt);

/// Default query time for a store.
Time default_query_time(const NormStore& store);

}  // namespace ddic
