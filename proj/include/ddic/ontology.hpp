#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ddic {

/// Index of a declared action; stable for the lifetime of the ontology.
struct ActionId {
  std::uint32_t value = 0;
  friend auto operator<=>(const ActionId&, const ActionId&) = default;
};

/// How two behaviors' application grounds overlap.
struct BehaviorRelation {
  enum class Kind : std::uint8_t { Equal, Specializes, Generalizes, Intersects, Disjoint };
  Kind kind = Kind::Disjoint;
  /// Lexicographically least common descendant; set only for Intersects.
  std::optional<ActionId> witness;

  friend bool operator==(const BehaviorRelation&, const BehaviorRelation&) = default;
};

const char* to_string(BehaviorRelation::Kind kind);

/// Acyclic action-entailment graph. An edge `specific -> general` reads
/// "doing `specific` is a way of doing `general`". Reachability is kept
/// as a reflexive-transitive closure, refreshed on every mutation.
///
/// Values are snapshots: the mutators are const and return a new graph.
class Ontology {
 public:
  /// Throws DeclarationError if `name` is already declared.
  [[nodiscard]] std::pair<Ontology, ActionId> add_action(std::string_view name) const;

  /// Throws DeclarationError on unknown ids, CycleError if the edge would
  /// close a cycle (including a self loop). Re-adding an edge is a no-op.
  [[nodiscard]] Ontology add_entailment(ActionId specific, ActionId general) const;

  /// `b` is reachable from `a` through zero or more edges.
  bool entails(ActionId a, ActionId b) const;

  /// Every y with entails(a, y) and entails(y, b), in id order. Empty when
  /// `a` does not entail `b`.
  std::vector<ActionId> between(ActionId a, ActionId b) const;

  BehaviorRelation relate(ActionId a, ActionId b) const;

  std::optional<ActionId> find(std::string_view name) const;
  /// Throws DeclarationError for unknown names.
  ActionId id(std::string_view name) const;
  const std::string& name(ActionId id) const;
  bool contains(ActionId id) const { return id.value < names_.size(); }

  std::size_t size() const { return names_.size(); }
  std::vector<ActionId> actions() const;
  /// Declared edges as (specific, general), in insertion order.
  const std::vector<std::pair<ActionId, ActionId>>& edges() const { return edges_; }

 private:
  void require(ActionId id) const;
  std::vector<ActionId> path(ActionId from, ActionId to) const;

  std::vector<std::string> names_;
  std::vector<std::pair<ActionId, ActionId>> edges_;
  // reach_[a][b] == entails(a, b)
  std::vector<std::vector<bool>> reach_;
};

}  // namespace ddic
