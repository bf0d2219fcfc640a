#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ddic {

/// Unknown or duplicate name in an ontology, context vocabulary or store.
class DeclarationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An entailment edge that would make the action graph cyclic.
class CycleError : public DeclarationError {
 public:
  CycleError(const std::string& what, std::vector<std::string> path)
      : DeclarationError(what), path_(std::move(path)) {}

  /// Names along the cycle, first and last element identical.
  const std::vector<std::string>& path() const { return path_; }

 private:
  std::vector<std::string> path_;
};

/// A caller broke a documented precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ddic
