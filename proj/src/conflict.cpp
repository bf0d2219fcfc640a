#include "ddic/conflict.hpp"

#include <algorithm>

#include "ddic/error.hpp"

namespace ddic {

namespace {

bool has_modals(const TestimonyAtom& a, const TestimonyAtom& b, Modal x, Modal y) {
  return (a.modal == x && b.modal == y) || (a.modal == y && b.modal == x);
}

// Indirect pairs that inheritance reconciles: `specific` is the atom on the
// more specific behavior.
std::optional<std::string> reconciled_indirect(const TestimonyAtom& specific,
                                               const TestimonyAtom& general) {
  if (general.modal == Modal::Obl && specific.modal == Modal::Opt) {
    return "no actual conflict: obligations do not inherit downward to more specific behaviors";
  }
  if (specific.modal == Modal::Imp && general.modal == Modal::Opt) {
    return "no actual conflict: the prohibition inherits downward while the discretionary norm "
           "only marks more general behaviors non-impermissible";
  }
  if (general.modal == Modal::Obl && specific.modal == Modal::Imp) {
    return "no actual conflict: the obligation inherits upward and the prohibition downward";
  }
  return std::nullopt;
}

}  // namespace

const char* to_string(ConflictKind kind) {
  switch (kind) {
    case ConflictKind::Direct: return "Direct";
    case ConflictKind::Indirect: return "Indirect";
    case ConflictKind::Intersecting: return "Intersecting";
  }
  return "?";
}

std::optional<ConflictReport> classify_pair(const Ontology& ont, const ContextVocabulary& vocab,
                                            const TestimonyAtom& a, const TestimonyAtom& b) {
  if (a.polarity != Polarity::Positive || b.polarity != Polarity::Positive) {
    throw ContractError("classify_pair expects positive stated atoms");
  }
  vocab.validate(a.context);
  vocab.validate(b.context);
  const auto relation = ont.relate(a.behavior, b.behavior);
  if (a.modal == b.modal) return std::nullopt;
  if (relation.kind == BehaviorRelation::Kind::Disjoint) return std::nullopt;
  if (!consistent(vocab, a.context, b.context)) return std::nullopt;

  const bool swap = b.time < a.time;
  ConflictReport report;
  report.first = swap ? b : a;
  report.second = swap ? a : b;
  report.shared_context = ContextFormula::conjunction(report.first.context, report.second.context);
  const bool simultaneous = a.time == b.time;

  switch (relation.kind) {
    case BehaviorRelation::Kind::Equal:
      report.kind = ConflictKind::Direct;
      report.shared_behavior = a.behavior;
      report.note = simultaneous
                        ? "simultaneous direct conflict: the two norms defeat each other on the shared grounds"
                        : "direct conflict: the later norm defeats the earlier one on the shared grounds";
      break;
    case BehaviorRelation::Kind::Specializes:
    case BehaviorRelation::Kind::Generalizes: {
      const bool a_specific = relation.kind == BehaviorRelation::Kind::Specializes;
      const auto& specific = a_specific ? a : b;
      const auto& general = a_specific ? b : a;
      report.kind = ConflictKind::Indirect;
      report.shared_behavior = specific.behavior;
      if (auto note = reconciled_indirect(specific, general)) {
        report.genuine = false;
        report.note = std::move(*note);
      } else {
        report.note = simultaneous
                          ? "simultaneous indirect conflict: the two norms defeat each other along the shared path"
                          : "indirect conflict: the later norm defeats the earlier one along the shared path";
      }
      break;
    }
    case BehaviorRelation::Kind::Intersects:
      report.kind = ConflictKind::Intersecting;
      report.shared_behavior = *relation.witness;
      report.genuine = false;
      report.note = has_modals(a, b, Modal::Obl, Modal::Opt)
                        ? "no actual conflict: the discretionary norm marks the intersection non-obligatory "
                          "and the obligation does not inherit downward"
                        : "no actual conflict: the prohibition inherits downward to the intersection";
      break;
    case BehaviorRelation::Kind::Disjoint:
      return std::nullopt;
  }
  return report;
}

std::vector<ConflictReport> scan_conflicts(const NormStore& store) {
  const auto& atoms = store.testimony();
  std::vector<ConflictReport> out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (auto report = classify_pair(store.ontology(), store.vocabulary(), atoms[i], atoms[j])) {
        out.push_back(std::move(*report));
      }
    }
  }
  const auto& ont = store.ontology();
  std::stable_sort(out.begin(), out.end(), [&ont](const ConflictReport& x, const ConflictReport& y) {
    if (x.first.time != y.first.time) return x.first.time < y.first.time;
    if (x.second.time != y.second.time) return x.second.time < y.second.time;
    return ont.name(x.shared_behavior) < ont.name(y.shared_behavior);
  });
  return out;
}

}  // namespace ddic
