#include "ddic/model.hpp"

#include <tuple>

#include "ddic/error.hpp"

namespace ddic {

namespace {

template <typename T>
int three_way(const T& a, const T& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

template <typename Atom>
int compare_fields(const Atom& a, const Atom& b) {
  if (int c = three_way(a.behavior, b.behavior)) return c;
  if (int c = three_way(a.modal, b.modal)) return c;
  if (int c = three_way(a.polarity, b.polarity)) return c;
  if (int c = three_way(a.time, b.time)) return c;
  return compare(a.context, b.context);
}

template <typename Atom>
std::string render(const Atom& atom, const Ontology& ont, bool testimony) {
  std::string out = atom.polarity == Polarity::Negative ? "¬" : "";
  if (testimony) {
    switch (atom.modal) {
      case Modal::Obl: out += "Öbl"; break;
      case Modal::Imp: out += "Ïmp"; break;
      case Modal::Opt: out += "Öpt"; break;
    }
  } else {
    out += to_string(atom.modal);
  }
  out += "(" + ont.name(atom.behavior) + ", " + to_string(atom.context) + ", " +
         std::to_string(atom.time) + ")";
  return out;
}

}  // namespace

const char* to_string(Modal m) {
  switch (m) {
    case Modal::Obl: return "Obl";
    case Modal::Imp: return "Imp";
    case Modal::Opt: return "Opt";
  }
  return "?";
}

int compare(const TestimonyAtom& a, const TestimonyAtom& b) { return compare_fields(a, b); }
int compare(const BeliefAtom& a, const BeliefAtom& b) { return compare_fields(a, b); }

TestimonyAtom complement(TestimonyAtom atom) {
  atom.polarity = flip(atom.polarity);
  return atom;
}

BeliefAtom complement(BeliefAtom atom) {
  atom.polarity = flip(atom.polarity);
  return atom;
}

const char* to_string(StatusLabel label) {
  switch (label) {
    case StatusLabel::Obligatory: return "Obligatory";
    case StatusLabel::Impermissible: return "Impermissible";
    case StatusLabel::Optional: return "Optional";
    case StatusLabel::NonObligatory: return "NonObligatory";
    case StatusLabel::NonImpermissible: return "NonImpermissible";
    case StatusLabel::Unknown: return "Unknown";
    case StatusLabel::Inconsistent: return "Inconsistent";
  }
  return "?";
}

StatusLabel label_of(std::span<const BeliefAtom> beliefs) {
  if (beliefs.empty()) return StatusLabel::Unknown;
  const auto& first = beliefs.front();
  // present[modal][polarity]
  bool present[3][2] = {};
  for (const auto& b : beliefs) {
    if (b.behavior != first.behavior || b.time != first.time || !(b.context == first.context)) {
      throw ContractError("label_of: beliefs do not share one (behavior, context, time) triple");
    }
    present[static_cast<int>(b.modal)][static_cast<int>(b.polarity)] = true;
  }
  const auto has = [&](Modal m, Polarity p) {
    return present[static_cast<int>(m)][static_cast<int>(p)];
  };
  for (const auto m : {Modal::Obl, Modal::Imp, Modal::Opt}) {
    if (has(m, Polarity::Positive) && has(m, Polarity::Negative)) return StatusLabel::Inconsistent;
  }
  const bool non_obl = has(Modal::Obl, Polarity::Negative);
  const bool non_imp = has(Modal::Imp, Polarity::Negative);
  if (has(Modal::Obl, Polarity::Positive)) return StatusLabel::Obligatory;
  if (has(Modal::Imp, Polarity::Positive)) return StatusLabel::Impermissible;
  if (non_obl && non_imp) return StatusLabel::Optional;
  if (non_obl) return StatusLabel::NonObligatory;
  if (non_imp) return StatusLabel::NonImpermissible;
  return StatusLabel::Unknown;
}

const char* to_string(RuleId rule) {
  switch (rule) {
    case RuleId::D1a: return "D1a";
    case RuleId::D1aConverse: return "D1a-converse";
    case RuleId::D1b: return "D1b";
    case RuleId::D1bContrapositive: return "MT-D1b";
    case RuleId::R1: return "R1";
    case RuleId::R2: return "R2";
    case RuleId::R3: return "R3";
    case RuleId::R4: return "R4";
    case RuleId::D1c: return "D1c";
    case RuleId::D1d: return "D1d";
    case RuleId::D1dContrapositive: return "MT-D1d";
  }
  return "?";
}

std::string to_string(const TestimonyAtom& atom, const Ontology& ont) { return render(atom, ont, true); }
std::string to_string(const BeliefAtom& atom, const Ontology& ont) { return render(atom, ont, false); }

std::string to_string(const Premise& premise, const Ontology& ont) {
  return std::visit([&ont](const auto& atom) { return to_string(atom, ont); }, premise);
}

std::string path_string(std::span<const ActionId> path, const Ontology& ont) {
  std::string out;
  for (const auto id : path) {
    if (!out.empty()) out += " -> ";
    out += ont.name(id);
  }
  return out;
}

}  // namespace ddic
