#pragma once

// The cooking ontology and helpers shared by the test binaries.

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ddic/dsl.hpp"
#include "ddic/store.hpp"

namespace fixture {

inline constexpr std::array<std::string_view, 6> kNodes{"H", "C", "HC", "CV", "HCV", "CP"};

inline const char* kHeader =
    "action H\naction C\naction HC\naction CV\naction HCV\naction CP\n"
    "entails HC -> H\nentails HC -> C\nentails CV -> C\n"
    "entails HCV -> HC\nentails HCV -> CV\nentails CP -> CV\n"
    "context Monday\ncontext Morning\n";

inline ddic::NormStore cooking() { return ddic::dsl::build_store(ddic::dsl::parse_script(kHeader)); }

inline ddic::ContextFormula ctx(std::string_view text) { return ddic::dsl::parse_context(text); }

inline ddic::ActionId id(const ddic::NormStore& s, std::string_view name) { return s.ontology().id(name); }

inline ddic::TestimonyAtom stated(const ddic::NormStore& s, ddic::Modal m, std::string_view b, std::string_view c,
                                  ddic::Time t) {
  return {ddic::Polarity::Positive, m, id(s, b), ctx(c), t, ddic::Origin::Stated};
}

inline ddic::NormStore with(ddic::NormStore s, ddic::Modal m, std::string_view b, std::string_view c, ddic::Time t) {
  return s.assert_testimony(stated(s, m, b, c, t));
}

inline const ddic::ContextFormula kDelta = ctx("Monday & Morning");

// Contexts over the two fixture atoms, satisfiable or not.
inline const std::vector<std::string> kContextPool{
    "true", "Monday", "Morning", "Monday & Morning", "Monday | Morning", "!Monday", "!Morning",
    "Monday -> Morning", "Monday & !Morning", "!(Monday | Morning)"};

// Query contexts: every satisfiable conjunction of literals.
inline const std::vector<std::string> kQueryPool{
    "Monday & Morning", "Monday & !Morning", "!Monday & Morning", "!Monday & !Morning", "Monday", "Morning", "true"};

struct RandomStore {
  ddic::NormStore store;
  ddic::ContextFormula delta;
  ddic::Time tn = 0;
};

// Up to `max_atoms` stated atoms over the fixture with pairwise-distinct
// timestamps drawn from 1..2*max_atoms.
inline RandomStore random_store(std::mt19937_64& rng, std::size_t max_atoms = 6) {
  auto s = cooking();
  std::uniform_int_distribution<std::size_t> count(0, max_atoms);
  std::uniform_int_distribution<int> modal(0, 2);
  std::uniform_int_distribution<std::size_t> node(0, kNodes.size() - 1);
  std::uniform_int_distribution<std::size_t> context(0, kContextPool.size() - 1);
  std::uniform_int_distribution<std::size_t> query(0, kQueryPool.size() - 1);

  std::vector<ddic::Time> times(2 * max_atoms);
  for (std::size_t i = 0; i < times.size(); ++i) times[i] = i + 1;
  std::shuffle(times.begin(), times.end(), rng);

  const auto n = count(rng);
  ddic::Time latest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    s = with(s, static_cast<ddic::Modal>(modal(rng)), kNodes[node(rng)], kContextPool[context(rng)], times[i]);
    latest = std::max(latest, times[i]);
  }
  // Half the stores are queried at their latest time, the rest anywhere.
  std::uniform_int_distribution<ddic::Time> tn(0, latest + 1);
  const auto at = std::bernoulli_distribution(0.5)(rng) ? latest : tn(rng);
  return {s, ctx(kQueryPool[query(rng)]), at};
}

inline std::string script(std::string_view body) { return std::string(kHeader) + std::string(body); }

}  // namespace fixture
