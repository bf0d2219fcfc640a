#pragma once

// Malformed `.ddic` inputs with the position and expectation each must
// report, and a generator of random well-formed scripts.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ddic/dsl.hpp"

namespace dsl_cases {

struct Malformed {
  std::string text;
  int line;
  int column;
  std::string expected;
};

inline const std::vector<Malformed>& malformed() {
  static const std::vector<Malformed> cases{
      {"frobnicate HC", 1, 1, "statement"},
      {"action", 1, 7, "action name"},
      {"action 42", 1, 8, "action name"},
      {"action HC extra", 1, 11, "end of line"},
      {"action HC\naction HC", 2, 8, "new action name"},
      {"context", 1, 8, "context name"},
      {"context true", 1, 9, "context name"},
      {"context M\ncontext M", 2, 9, "new context name"},
      {"entails HC C", 1, 12, "'->'"},
      {"entails HC ->", 1, 14, "action name"},
      {"entails -> C", 1, 9, "action name"},
      {"entails HC -> C -> H", 1, 17, "end of line"},
      {"@ obl(HC, true)", 1, 3, "natural number"},
      {"@x obl(HC, true)", 1, 2, "natural number"},
      {"@1 must(HC, true)", 1, 4, "'obl', 'imp' or 'opt'"},
      {"@1 Obl(HC, true)", 1, 4, "'obl', 'imp' or 'opt'"},
      {"@1 (HC, true)", 1, 4, "'obl', 'imp' or 'opt'"},
      {"@1 obl HC, true", 1, 8, "'('"},
      {"@1 obl(HC Monday)", 1, 11, "','"},
      {"@1 obl(, true)", 1, 8, "action name"},
      {"@1 obl(HC, )", 1, 12, "context formula"},
      {"@1 obl(HC, true", 1, 16, "')'"},
      {"@1 obl(HC, true))", 1, 17, "end of line"},
      {"@1 obl(HC, Monday &)", 1, 20, "context formula"},
      {"@1 obl(HC, (Monday)", 1, 20, "')'"},
      {"@1 obl(HC, Monday Morning)", 1, 19, "')'"},
      {"@1 obl(HC, !)", 1, 13, "context formula"},
      {"@1 obl(HC, Monday -> )", 1, 22, "context formula"},
      {"@1 obl(HC, Monday $ Morning)", 1, 19, "token"},
      {"@99999999999999999999 obl(HC, true)", 1, 2, "natural number below 2^64"},
      {"query 1 (HC, true)", 1, 7, "'@'"},
      {"query @1 HC, true)", 1, 10, "'('"},
      {"query @1 (HC true)", 1, 14, "','"},
      {"query @ (HC, true)", 1, 9, "natural number"},
      {"expect @1 Must(HC, true)", 1, 11, "'Obl', 'Imp' or 'Opt'"},
      {"expect @1 obl(HC, true)", 1, 11, "'Obl', 'Imp' or 'Opt'"},
      {"expect never @1 Obl(HC, true)", 1, 8, "'@'"},
      {"expect not Obl(HC, true)", 1, 12, "'@'"},
      {"expect @1 ~~Obl(HC, true)", 1, 12, "'Obl', 'Imp' or 'Opt'"},
      {"expect @1 Obl(HC, true) extra", 1, 25, "end of line"},
      {"action HC\n@1 obl(HD, true)", 2, 8, "declared action"},
      {"action HC\n@1 obl(HC, Monday)", 2, 12, "declared context"},
      {"entails A -> B", 1, 9, "declared action"},
      {"action A\nentails A -> B", 2, 14, "declared action"},
      {"context Monday\naction HC\nquery @1 (HC, Monday | Tuesday)", 3, 24, "declared context"},
      {"@1 obl(HC, true) # comment\n\n  \n@2 imp(HC, nope)\naction HC", 4, 12, "declared context"},
      {"action HC\n@1 obl(HC, true)\n@2 opt(HC, true) (", 3, 18, "end of line"},
      {"@1 obl(HC, true) @2", 1, 18, "end of line"},
      {"action H-C", 1, 9, "token"},
      {"context Morning\naction HC\n@1 obl(HC, Morning & true & ()", 3, 30, "context formula"},
      {"@1 obl(HC, true) # trailing", 1, 8, "declared action"},
      {"\taction\tHC\n\tquery\t@1\t(HC,\tMonday)", 2, 16, "declared context"},
      {"action HC\r\n@1 obl(HC true)\r\n", 2, 11, "','"},
      {"action A # first\naction A # again", 2, 8, "new action name"},
  };
  return cases;
}

// Random scripts over the cooking ontology. Context formulas mix every
// connective, `true` and redundant nesting.
class ScriptGenerator {
 public:
  explicit ScriptGenerator(std::uint64_t seed) : rng_(seed) {}

  ddic::dsl::Script next() {
    ddic::dsl::Script s;
    s.actions = {"H", "C", "HC", "CV", "HCV", "CP"};
    s.entailments = {{"HC", "H"}, {"HC", "C"}, {"CV", "C"}, {"HCV", "HC"}, {"HCV", "CV"}, {"CP", "CV"}};
    s.contexts = {"Monday", "Morning", "Rain_2"};
    std::shuffle(s.actions.begin(), s.actions.end(), rng_);
    std::shuffle(s.entailments.begin(), s.entailments.end(), rng_);
    const auto n = pick(8);
    for (std::size_t i = 0; i < n; ++i) {
      s.testimony.push_back({time(), static_cast<ddic::Modal>(pick(3)), action(), formula(3)});
    }
    for (std::size_t i = 0, q = pick(3); i < q; ++i) s.queries.push_back({time(), action(), formula(3)});
    for (std::size_t i = 0, e = pick(4); i < e; ++i) {
      ddic::dsl::ExpectLine line;
      line.present = pick(2) == 0;
      line.polarity = pick(2) == 0 ? ddic::Polarity::Positive : ddic::Polarity::Negative;
      line.modal = static_cast<ddic::Modal>(pick(3));
      line.behavior = action();
      line.context = formula(3);
      line.time = time();
      s.expectations.push_back(std::move(line));
    }
    return s;
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  ddic::Time time() { return pick(4) == 0 ? 0 : pick(20); }
  std::string action() {
    static const char* names[] = {"H", "C", "HC", "CV", "HCV", "CP"};
    return names[pick(6)];
  }

  ddic::ContextFormula formula(int depth) {
    using F = ddic::ContextFormula;
    static const char* atoms[] = {"Monday", "Morning", "Rain_2"};
    const auto choice = depth == 0 ? pick(2) : pick(7);
    switch (choice) {
      case 0: return pick(5) == 0 ? F::top() : F::atom(atoms[pick(3)]);
      case 1: return F::atom(atoms[pick(3)]);
      case 2: return F::negation(formula(depth - 1));
      case 3: return F::conjunction(formula(depth - 1), formula(depth - 1));
      case 4: return F::disjunction(formula(depth - 1), formula(depth - 1));
      case 5: return F::implication(formula(depth - 1), formula(depth - 1));
      default: return F::atom(atoms[pick(3)]);
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace dsl_cases
