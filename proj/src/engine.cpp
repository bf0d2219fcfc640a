#include "ddic/engine.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "ddic/conflict.hpp"
#include "ddic/error.hpp"

namespace ddic {

namespace {

// ---------------------------------------------------------------------------
// Testimony closure

struct TripleKey {
  ActionId behavior;
  Time time;
  ContextFormula context;
};

struct TripleLess {
  bool operator()(const TripleKey& a, const TripleKey& b) const {
    if (a.behavior != b.behavior) return a.behavior < b.behavior;
    if (a.time != b.time) return a.time < b.time;
    return compare(a.context, b.context) < 0;
  }
};

// Literal slot within a triple: modal * 2 + polarity.
constexpr int slot(Modal m, Polarity p) { return static_cast<int>(m) * 2 + static_cast<int>(p); }

// ---------------------------------------------------------------------------
// Default rules

struct DefaultShape {
  RuleId rule;
  Polarity polarity;  // of premise and conclusion
  Modal modal;
  bool upward;        // conclusion targets more general behaviors
};

constexpr DefaultShape kR1{RuleId::R1, Polarity::Positive, Modal::Obl, true};
constexpr DefaultShape kR2{RuleId::R2, Polarity::Negative, Modal::Imp, true};
constexpr DefaultShape kR3{RuleId::R3, Polarity::Positive, Modal::Imp, false};
constexpr DefaultShape kR4{RuleId::R4, Polarity::Negative, Modal::Obl, false};
constexpr DefaultShape kDefaults[] = {kR1, kR2, kR3, kR4};

const DefaultShape* shape_for(const TestimonyAtom& atom) {
  for (const auto& shape : kDefaults) {
    if (shape.polarity == atom.polarity && shape.modal == atom.modal) return &shape;
  }
  return nullptr;
}

std::string entailment_text(const Ontology& ont, ActionId from, ActionId to) {
  return ont.name(from) + " -> " + ont.name(to);
}

// Caches context entailments against one query context.
class Grounding {
 public:
  Grounding(const NormStore& store, const ClosedTestimony& ct, const ContextFormula& delta,
            Time query_time)
      : store_(store),
        ct_(ct),
        delta_(delta),
        delta_table_(store.vocabulary(), delta),
        query_time_(query_time),
        delta_entails_(ct.entries.size(), -1) {}

  bool delta_entails(std::size_t entry) const {
    auto& cached = delta_entails_[entry];
    if (cached < 0) {
      cached = delta_table_.subset_of(TruthTable(store_.vocabulary(), ct_.entries[entry].atom.context)) ? 1 : 0;
    }
    return cached == 1;
  }

  RuleOutcome apply(const DefaultShape& shape, std::size_t premise, ActionId target) const {
    const auto& ont = store_.ontology();
    const auto& stated = ct_.entries[premise].atom;
    const ActionId a = stated.behavior;
    const ActionId b = target;
    const bool reaches = shape.upward ? ont.entails(a, b) : ont.entails(b, a);
    if (!reaches) {
      return NotApplicable{shape.upward ? ont.name(a) + " does not entail " + ont.name(b)
                                        : ont.name(b) + " does not entail " + ont.name(a)};
    }
    if (!delta_entails(premise)) {
      return NotApplicable{"query context does not entail " + to_string(stated.context)};
    }
    if (stated.time > query_time_) {
      return NotApplicable{"testimony at " + std::to_string(stated.time) + " is after the query time"};
    }

    DerivationTrace trace;
    trace.conclusion = BeliefAtom{shape.polarity, shape.modal, b, delta_, query_time_};
    append_support(premise, trace.applications);
    trace.applications.push_back(RuleApplication{
        shape.rule,
        {stated},
        {shape.upward ? entailment_text(ont, a, b) : entailment_text(ont, b, a),
         to_string(delta_) + " -> " + to_string(stated.context),
         std::to_string(stated.time) + " <= " + std::to_string(query_time_)}});

    const Polarity defeater_polarity = flip(shape.polarity);
    for (std::size_t i = 0; i < ct_.entries.size(); ++i) {
      const auto& cand = ct_.entries[i].atom;
      if (cand.modal != shape.modal || cand.polarity != defeater_polarity) continue;
      if (cand.time < stated.time || cand.time > query_time_) continue;
      if (!delta_entails(i)) continue;
      const ActionId z = cand.behavior;
      DefeatRecord record{shape.rule, 1, stated, cand, {}, {stated.time, cand.time, query_time_}};
      if (shape.upward) {
        if (!ont.entails(a, z)) continue;
        record.path = {a, z};
      } else if (ont.entails(z, b) && ont.entails(b, a)) {
        record.path = {z, b, a};
      } else if (ont.entails(b, z) && ont.entails(z, a)) {
        record.justification = 2;
        record.path = {b, z, a};
      } else {
        continue;
      }
      trace.defeats.push_back(std::move(record));
    }

    if (!trace.defeats.empty()) {
      trace.blocked = true;
      return Defeated{std::move(trace)};
    }
    auto belief = trace.conclusion;
    return Derived{std::move(belief), std::move(trace)};
  }

 private:
  // N-stage applications that produced a derived premise, oldest first.
  void append_support(std::size_t entry, std::vector<RuleApplication>& out) const {
    const auto& e = ct_.entries[entry];
    if (!e.rule) return;
    for (const auto p : e.premises) append_support(p, out);
    RuleApplication app{*e.rule, {}, {}};
    for (const auto p : e.premises) app.premises.emplace_back(ct_.entries[p].atom);
    out.push_back(std::move(app));
  }

  const NormStore& store_;
  const ClosedTestimony& ct_;
  const ContextFormula& delta_;
  TruthTable delta_table_;
  Time query_time_;
  mutable std::vector<int> delta_entails_;
};

RuleOutcome try_inherit(const DefaultShape& shape, const NormStore& store, const ClosedTestimony& ct,
                        const TestimonyAtom& stated, ActionId target, const ContextFormula& delta,
                        Time query_time) {
  if (stated.polarity != shape.polarity || stated.modal != shape.modal) {
    throw ContractError(std::string(to_string(shape.rule)) + " premise has the wrong polarity or modal");
  }
  const auto index = ct.find(stated);
  if (!index) throw ContractError("premise is not part of the closed testimony");
  store.vocabulary().validate(delta);
  if (!store.ontology().contains(target)) {
    throw DeclarationError("unknown action id " + std::to_string(target.value));
  }
  return Grounding(store, ct, delta, query_time).apply(shape, *index, target);
}

// One cell per literal of a triple or node, holding an entry or trace index.
struct Slots {
  std::optional<std::size_t> cell[6];
};

}  // namespace

std::optional<std::size_t> ClosedTestimony::find(const TestimonyAtom& atom) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (compare(entries[i].atom, atom) == 0) return i;
  }
  return std::nullopt;
}

ClosedTestimony close_testimony(const NormStore& store, std::optional<Time> up_to) {
  ClosedTestimony ct;
  std::map<TripleKey, Slots, TripleLess> triples;

  const auto add = [&](TestimonyAtom atom, std::optional<RuleId> rule, std::vector<std::size_t> premises) {
    auto& slots = triples[TripleKey{atom.behavior, atom.time, atom.context}];
    auto& cell = slots.cell[slot(atom.modal, atom.polarity)];
    if (cell) return false;
    cell = ct.entries.size();
    ct.entries.push_back(ClosedEntry{std::move(atom), rule, std::move(premises)});
    return true;
  };

  for (const auto& atom : store.testimony()) {
    if (up_to && atom.time > *up_to) continue;
    add(atom, std::nullopt, {});
  }

  // Every rule only reads and writes one triple, so a per-triple fixpoint
  // closes the whole set.
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& [key, slots] : triples) {
      const auto at = [&](Modal m, Polarity p) { return slots.cell[slot(m, p)]; };
      const auto derive = [&](Modal m, Polarity p, RuleId rule, std::vector<std::size_t> premises) {
        const auto& base = ct.entries[premises.front()].atom;
        TestimonyAtom atom{p, m, base.behavior, base.context, base.time, Origin::Derived};
        changed |= add(std::move(atom), rule, std::move(premises));
      };
      if (auto opt = at(Modal::Opt, Polarity::Positive)) {
        derive(Modal::Obl, Polarity::Negative, RuleId::D1a, {*opt});
        derive(Modal::Imp, Polarity::Negative, RuleId::D1a, {*opt});
      }
      if (auto obl = at(Modal::Obl, Polarity::Positive)) {
        derive(Modal::Imp, Polarity::Negative, RuleId::D1b, {*obl});
      }
      if (auto imp = at(Modal::Imp, Polarity::Positive)) {
        derive(Modal::Obl, Polarity::Negative, RuleId::D1bContrapositive, {*imp});
      }
      auto non_obl = at(Modal::Obl, Polarity::Negative);
      auto non_imp = at(Modal::Imp, Polarity::Negative);
      if (non_obl && non_imp) {
        derive(Modal::Opt, Polarity::Positive, RuleId::D1aConverse, {*non_obl, *non_imp});
      }
    }
  }

  for (const auto& [key, slots] : triples) {
    for (const auto m : {Modal::Obl, Modal::Imp, Modal::Opt}) {
      const auto pos = slots.cell[slot(m, Polarity::Positive)];
      const auto neg = slots.cell[slot(m, Polarity::Negative)];
      if (pos && neg) ct.contradictions.emplace_back(std::min(*pos, *neg), std::max(*pos, *neg));
    }
  }
  std::sort(ct.contradictions.begin(), ct.contradictions.end());
  return ct;
}

RuleOutcome try_inherit_obl(const NormStore& store, const ClosedTestimony& ct, const TestimonyAtom& stated,
                            ActionId target, const ContextFormula& delta, Time query_time) {
  return try_inherit(kR1, store, ct, stated, target, delta, query_time);
}

RuleOutcome try_inherit_nonimp(const NormStore& store, const ClosedTestimony& ct, const TestimonyAtom& stated,
                               ActionId target, const ContextFormula& delta, Time query_time) {
  return try_inherit(kR2, store, ct, stated, target, delta, query_time);
}

RuleOutcome try_inherit_imp(const NormStore& store, const ClosedTestimony& ct, const TestimonyAtom& stated,
                            ActionId target, const ContextFormula& delta, Time query_time) {
  return try_inherit(kR3, store, ct, stated, target, delta, query_time);
}

RuleOutcome try_inherit_nonobl(const NormStore& store, const ClosedTestimony& ct, const TestimonyAtom& stated,
                               ActionId target, const ContextFormula& delta, Time query_time) {
  return try_inherit(kR4, store, ct, stated, target, delta, query_time);
}

std::vector<std::string> store_diagnostics(const NormStore& store, std::optional<Time> up_to) {
  std::vector<std::string> out;
  const auto& ont = store.ontology();
  const auto& atoms = store.testimony();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (up_to && atoms[i].time > *up_to) continue;
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (atoms[j].time != atoms[i].time) continue;
      if (auto report = classify_pair(ont, store.vocabulary(), atoms[i], atoms[j])) {
        out.push_back("simultaneous conflicting testimony at time " + std::to_string(atoms[i].time) + ": " +
                      to_string(atoms[i], ont) + " and " + to_string(atoms[j], ont) + " (" +
                      to_string(report->kind) + " at " + ont.name(report->shared_behavior) + ")");
      }
    }
  }
  const auto ct = close_testimony(store, up_to);
  for (const auto& [x, y] : ct.contradictions) {
    out.push_back("contradictory testimony: " + to_string(ct.entries[x].atom, ont) + " and " +
                  to_string(ct.entries[y].atom, ont));
  }
  return out;
}

std::vector<StatusReport> derive_beliefs(const NormStore& store, const ContextFormula& delta, Time query_time,
                                         const EngineOptions& options) {
  const auto& ont = store.ontology();
  store.vocabulary().validate(delta);

  // Stage N.
  const auto ct = close_testimony(store, query_time);
  const Grounding grounding(store, ct, delta, query_time);

  // Stage D. Defeaters are read from the closed testimony only, so the
  // order of applications cannot change the outcome.
  std::vector<std::pair<std::size_t, ActionId>> instances;
  for (std::size_t i = 0; i < ct.entries.size(); ++i) {
    if (!shape_for(ct.entries[i].atom)) continue;
    for (const auto b : ont.actions()) instances.emplace_back(i, b);
  }
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(instances.begin(), instances.end(), rng);
  }

  std::vector<StatusReport> reports(ont.size());
  std::vector<Slots> slots(ont.size());
  for (const auto b : ont.actions()) {
    auto& r = reports[b.value];
    r.behavior = b;
    r.context = delta;
    r.time = query_time;
  }

  // Evaluate in whatever order was requested, record in canonical order.
  std::vector<std::tuple<std::size_t, ActionId, RuleOutcome>> outcomes;
  for (const auto& [entry, target] : instances) {
    outcomes.emplace_back(entry, target, grounding.apply(*shape_for(ct.entries[entry].atom), entry, target));
  }
  std::sort(outcomes.begin(), outcomes.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x).value) < std::tie(std::get<0>(y), std::get<1>(y).value);
  });

  for (auto& [entry, target, outcome] : outcomes) {
    auto& report = reports[target.value];
    if (auto* derived = std::get_if<Derived>(&outcome)) {
      auto& cell = slots[target.value].cell[slot(derived->belief.modal, derived->belief.polarity)];
      if (!cell) cell = report.traces.size();
      report.traces.push_back(std::move(derived->trace));
    } else if (auto* defeated = std::get_if<Defeated>(&outcome)) {
      report.traces.push_back(std::move(defeated->trace));
    }
  }

  // Stage B.
  const auto global = store_diagnostics(store, query_time);
  for (const auto b : ont.actions()) {
    auto& report = reports[b.value];
    auto& cells = slots[b.value].cell;
    const auto add = [&](Modal m, Polarity p, RuleId rule, std::vector<Modal> from_modals, Polarity from_pol) {
      auto& cell = cells[slot(m, p)];
      if (cell) return false;
      DerivationTrace trace;
      trace.conclusion = BeliefAtom{p, m, b, delta, query_time};
      RuleApplication app{rule, {}, {}};
      for (const auto fm : from_modals) app.premises.emplace_back(BeliefAtom{from_pol, fm, b, delta, query_time});
      trace.applications.push_back(std::move(app));
      cell = report.traces.size();
      report.traces.push_back(std::move(trace));
      return true;
    };
    for (bool changed = true; changed;) {
      changed = false;
      if (cells[slot(Modal::Obl, Polarity::Positive)]) {
        changed |= add(Modal::Imp, Polarity::Negative, RuleId::D1d, {Modal::Obl}, Polarity::Positive);
      }
      if (cells[slot(Modal::Imp, Polarity::Positive)]) {
        changed |= add(Modal::Obl, Polarity::Negative, RuleId::D1dContrapositive, {Modal::Imp}, Polarity::Positive);
      }
      if (cells[slot(Modal::Obl, Polarity::Negative)] && cells[slot(Modal::Imp, Polarity::Negative)]) {
        changed |= add(Modal::Opt, Polarity::Positive, RuleId::D1c, {Modal::Obl, Modal::Imp}, Polarity::Negative);
      }
    }

    for (const auto m : {Modal::Obl, Modal::Imp, Modal::Opt}) {
      for (const auto p : {Polarity::Positive, Polarity::Negative}) {
        if (cells[slot(m, p)]) report.beliefs.push_back(BeliefAtom{p, m, b, delta, query_time});
      }
    }
    report.label = label_of(report.beliefs);
    report.diagnostics = global;
    if (report.label == StatusLabel::Inconsistent) {
      report.diagnostics.push_back("complementary beliefs about " + ont.name(b) + " at time " +
                                   std::to_string(query_time));
    }
  }
  return reports;
}

Time default_query_time(const NormStore& store) { return store.max_time().value_or(0); }

StatusReport query_status(const NormStore& store, ActionId behavior, const ContextFormula& delta,
                          std::optional<Time> query_time) {
  if (!store.ontology().contains(behavior)) {
    throw DeclarationError("unknown action id " + std::to_string(behavior.value));
  }
  store.vocabulary().validate(delta);
  auto reports = derive_beliefs(store, delta, query_time.value_or(default_query_time(store)));
  return std::move(reports[behavior.value]);
}

}  // namespace ddic
