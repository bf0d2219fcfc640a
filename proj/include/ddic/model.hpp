#pragma once

// Shared vocabulary: modals, signed testimony and belief atoms, status
// labels, and the records that make derivations inspectable.

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ddic/context.hpp"
#include "ddic/ontology.hpp"

namespace ddic {

using Time = std::uint64_t;

enum class Modal : std::uint8_t { Obl, Imp, Opt };
enum class Polarity : std::uint8_t { Positive, Negative };
enum class Origin : std::uint8_t { Stated, Derived };

const char* to_string(Modal m);

constexpr Polarity flip(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

/// "At `time` it was said that, given `context`, `behavior` is `modal`."
struct TestimonyAtom {
  Polarity polarity = Polarity::Positive;
  Modal modal = Modal::Obl;
  ActionId behavior;
  ContextFormula context;
  Time time = 0;
  Origin origin = Origin::Stated;

  friend bool operator==(const TestimonyAtom&, const TestimonyAtom&) = default;
};

/// "At `time` it is believed that, given `context`, `behavior` is `modal`."
struct BeliefAtom {
  Polarity polarity = Polarity::Positive;
  Modal modal = Modal::Obl;
  ActionId behavior;
  ContextFormula context;
  Time time = 0;

  friend bool operator==(const BeliefAtom&, const BeliefAtom&) = default;
};

/// Order ignoring origin; atoms equal under it make the same statement.
int compare(const TestimonyAtom& a, const TestimonyAtom& b);
int compare(const BeliefAtom& a, const BeliefAtom& b);

struct BeliefLess {
  bool operator()(const BeliefAtom& a, const BeliefAtom& b) const { return compare(a, b) < 0; }
};

/// Flips polarity, leaves every other field alone.
TestimonyAtom complement(TestimonyAtom atom);
BeliefAtom complement(BeliefAtom atom);

enum class StatusLabel : std::uint8_t {
  Obligatory,
  Impermissible,
  Optional,
  NonObligatory,
  NonImpermissible,
  Unknown,
  Inconsistent,
};

const char* to_string(StatusLabel label);

/// Summarises the beliefs held about one (behavior, context, time) triple.
/// Precedence: Inconsistent, Obligatory, Impermissible, Optional, the
/// single negatives, Unknown. Throws ContractError on mixed triples.
StatusLabel label_of(std::span<const BeliefAtom> beliefs);

enum class RuleId : std::uint8_t {
  D1a,                // Opt => ~Obl & ~Imp (testimony)
  D1aConverse,        // ~Obl & ~Imp => Opt (testimony)
  D1b,                // Obl => ~Imp (testimony)
  D1bContrapositive,  // Imp => ~Obl (testimony)
  R1,
  R2,
  R3,
  R4,
  D1c,                // ~Obl & ~Imp => Opt (belief)
  D1d,                // Obl => ~Imp (belief)
  D1dContrapositive,  // Imp => ~Obl (belief)
};

const char* to_string(RuleId rule);

struct TimeWindow {
  Time stated = 0;
  Time defeater = 0;
  Time query = 0;
  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

/// A default blocked by a testimony atom that negates one of its
/// justifications. `path` is the entailment chain the justification names:
/// [a, z] for R1/R2, [z, b, a] for the first R3/R4 justification and
/// [b, y, a] for the second.
struct DefeatRecord {
  RuleId rule = RuleId::R1;
  int justification = 1;
  TestimonyAtom stated;
  TestimonyAtom defeater;
  std::vector<ActionId> path;
  TimeWindow window;
};

using Premise = std::variant<TestimonyAtom, BeliefAtom>;

struct RuleApplication {
  RuleId rule = RuleId::R1;
  std::vector<Premise> premises;
  std::vector<std::string> side_conditions;
};

/// One attempted derivation of `conclusion`. Blocked traces carry at least
/// one defeat, derived ones none.
struct DerivationTrace {
  BeliefAtom conclusion;
  bool blocked = false;
  std::vector<RuleApplication> applications;
  std::vector<DefeatRecord> defeats;
};

// Rendering: accented modals for testimony, `¬` for negation.
std::string to_string(const TestimonyAtom& atom, const Ontology& ont);
std::string to_string(const BeliefAtom& atom, const Ontology& ont);
std::string to_string(const Premise& premise, const Ontology& ont);
/// `HCV -> HC -> C`
std::string path_string(std::span<const ActionId> path, const Ontology& ont);

}  // namespace ddic
