#include "ddic/ontology.hpp"

#include <algorithm>
#include <deque>

#include "ddic/error.hpp"

namespace ddic {

const char* to_string(BehaviorRelation::Kind kind) {
  switch (kind) {
    case BehaviorRelation::Kind::Equal: return "Equal";
    case BehaviorRelation::Kind::Specializes: return "Specializes";
    case BehaviorRelation::Kind::Generalizes: return "Generalizes";
    case BehaviorRelation::Kind::Intersects: return "Intersects";
    case BehaviorRelation::Kind::Disjoint: return "Disjoint";
  }
  return "?";
}

std::pair<Ontology, ActionId> Ontology::add_action(std::string_view name) const {
  if (find(name)) throw DeclarationError("action '" + std::string(name) + "' declared twice");
  Ontology next = *this;
  const ActionId id{static_cast<std::uint32_t>(names_.size())};
  next.names_.emplace_back(name);
  for (auto& row : next.reach_) row.push_back(false);
  next.reach_.emplace_back(next.names_.size(), false);
  next.reach_.back()[id.value] = true;
  return {std::move(next), id};
}

Ontology Ontology::add_entailment(ActionId specific, ActionId general) const {
  require(specific);
  require(general);
  if (entails(general, specific)) {
    // general ->* specific, closed by the new edge back to general.
    std::vector<std::string> cycle;
    for (const auto id : path(general, specific)) cycle.push_back(name(id));
    cycle.push_back(name(general));
    std::string text;
    for (const auto& n : cycle) text += (text.empty() ? "" : " -> ") + n;
    throw CycleError("entailment " + name(specific) + " -> " + name(general) + " closes cycle " + text,
                     std::move(cycle));
  }
  if (std::find(edges_.begin(), edges_.end(), std::pair{specific, general}) != edges_.end()) {
    return *this;
  }
  Ontology next = *this;
  next.edges_.emplace_back(specific, general);
  const auto n = names_.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!reach_[x][specific.value]) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (reach_[general.value][y]) next.reach_[x][y] = true;
    }
  }
  return next;
}

bool Ontology::entails(ActionId a, ActionId b) const {
  require(a);
  require(b);
  return reach_[a.value][b.value];
}

std::vector<ActionId> Ontology::between(ActionId a, ActionId b) const {
  std::vector<ActionId> out;
  if (!entails(a, b)) return out;
  for (const auto y : actions()) {
    if (reach_[a.value][y.value] && reach_[y.value][b.value]) out.push_back(y);
  }
  return out;
}

BehaviorRelation Ontology::relate(ActionId a, ActionId b) const {
  using K = BehaviorRelation::Kind;
  const bool down = entails(a, b);
  const bool up = entails(b, a);
  if (a == b || (down && up)) return {K::Equal, std::nullopt};
  if (down) return {K::Specializes, std::nullopt};
  if (up) return {K::Generalizes, std::nullopt};
  std::optional<ActionId> witness;
  for (const auto w : actions()) {
    if (!reach_[w.value][a.value] || !reach_[w.value][b.value]) continue;
    if (!witness || name(w) < name(*witness)) witness = w;
  }
  if (witness) return {K::Intersects, witness};
  return {K::Disjoint, std::nullopt};
}

std::optional<ActionId> Ontology::find(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return ActionId{static_cast<std::uint32_t>(it - names_.begin())};
}

ActionId Ontology::id(std::string_view name) const {
  if (auto found = find(name)) return *found;
  throw DeclarationError("undeclared action '" + std::string(name) + "'");
}

const std::string& Ontology::name(ActionId id) const {
  require(id);
  return names_[id.value];
}

std::vector<ActionId> Ontology::actions() const {
  std::vector<ActionId> out;
  out.reserve(names_.size());
  for (std::uint32_t i = 0; i < names_.size(); ++i) out.push_back(ActionId{i});
  return out;
}

void Ontology::require(ActionId id) const {
  if (!contains(id)) throw DeclarationError("unknown action id " + std::to_string(id.value));
}

// Shortest edge path from -> to; assumes entails(from, to).
std::vector<ActionId> Ontology::path(ActionId from, ActionId to) const {
  std::vector<std::optional<ActionId>> parent(names_.size());
  std::vector<bool> seen(names_.size(), false);
  std::deque<ActionId> queue{from};
  seen[from.value] = true;
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    if (cur == to) break;
    for (const auto& [s, g] : edges_) {
      if (s == cur && !seen[g.value]) {
        seen[g.value] = true;
        parent[g.value] = cur;
        queue.push_back(g);
      }
    }
  }
  std::vector<ActionId> out{to};
  while (out.back() != from) out.push_back(*parent[out.back().value]);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace ddic
