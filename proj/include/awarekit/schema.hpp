// Axiom schemas: formulas whose leaves may be metavariables.

#ifndef AWAREKIT_SCHEMA_HPP_
#define AWAREKIT_SCHEMA_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "awarekit/formula.hpp"

namespace awarekit {

using Substitution = std::map<std::string, Formula>;

class Schema {
 public:
  Schema() = default;
  explicit Schema(Formula pattern) : pattern_(std::move(pattern)) {}

  // Reads schema text; capitalised Greek names (Phi, Psi, ...) are metavariables.
  static Schema parse(std::string_view text);

  const Formula& pattern() const { return pattern_; }
  bool closed() const { return !pattern_.has_metavariables(); }

  friend bool operator==(const Schema&, const Schema&) = default;

 private:
  Formula pattern_;
};

class UnboundMetavariable : public std::runtime_error {
 public:
  explicit UnboundMetavariable(std::string name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// First-order matching; repeated metavariables must bind equal subtrees.
std::optional<Substitution> match_schema(const Schema& s, const Formula& f);

// Simultaneous substitution. Throws UnboundMetavariable.
Formula instantiate(const Schema& s, const Substitution& sigma);

// Replaces the named atoms of f by metavariables (atom -> metavariable name).
Schema generalize(const Formula& f, const std::map<std::string, std::string>& atom_to_meta);

std::string render(const Substitution& sigma);

}  // namespace awarekit

#endif  // AWAREKIT_SCHEMA_HPP_
