// Hilbert-style proofs for the awareness logic.
//
// Two derivability relations are checked:
//   theorem mode   axioms + modus ponens, necessitation, both monotonicity rules
//   hypothesis     axioms + hypotheses + cited theorems, modus ponens only
//
// Proofs may cite earlier results from a TheoremRegistry. The registry only
// admits scripts that check in theorem mode.

#ifndef AWAREKIT_PROOF_HPP_
#define AWAREKIT_PROOF_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "awarekit/formula.hpp"
#include "awarekit/schema.hpp"

namespace awarekit {

enum class AxiomId {
  Taut,
  Truth,          // K Phi -> Phi
  NegIntro,       // ~K Phi -> K ~K Phi
  Dist,           // K(Phi -> Psi) -> (K Phi -> K Psi)
  SelfAwareR,     // Phi -> R Phi
  SelfAwareD,     // K Phi -> D Phi
  IntroAware,     // D Phi -> K D Phi
  UnawareFalseR,  // ~R false
  UnawareFalseD,  // ~D false
  Disj,           // R(Phi | Psi) -> R Phi | R Psi
  GenAware,       // D(R Phi | D Phi) -> D Phi
};

// Proof-file keyword: taut, truth, negintro, dist, selfR, selfD, introaware,
// unfalseR, unfalseD, disj, genaware.
const char* axiom_keyword(AxiomId id);
std::optional<AxiomId> axiom_from_keyword(std::string_view word);
// Throws std::invalid_argument for Taut, which has no schema.
const Schema& axiom_schema(AxiomId id);
// The ten schematic axioms, in declaration order.
const std::vector<AxiomId>& schematic_axioms();

namespace just {
struct Axiom {
  AxiomId id;
  friend bool operator==(const Axiom&, const Axiom&) = default;
};
struct Hyp {
  std::size_t index;
  friend bool operator==(const Hyp&, const Hyp&) = default;
};
// From line `minor` (x) and line `major` (x -> this).
struct MP {
  std::size_t minor;
  std::size_t major;
  friend bool operator==(const MP&, const MP&) = default;
};
struct Nec {
  std::size_t line;
  friend bool operator==(const Nec&, const Nec&) = default;
};
struct MonoD {
  std::size_t line;
  friend bool operator==(const MonoD&, const MonoD&) = default;
};
struct MonoR {
  std::size_t line;
  friend bool operator==(const MonoR&, const MonoR&) = default;
};
struct Cite {
  std::string name;
  Substitution sigma;
  friend bool operator==(const Cite&, const Cite&) = default;
};
}  // namespace just

using Justification =
    std::variant<just::Axiom, just::Hyp, just::MP, just::Nec, just::MonoD, just::MonoR, just::Cite>;

std::string rule_name(const Justification& j);

struct ProofLine {
  Formula formula;
  Justification why;
  friend bool operator==(const ProofLine&, const ProofLine&) = default;
};

struct ProofScript {
  enum class Mode { Theorem, FromHypotheses };

  Mode mode = Mode::Theorem;
  std::string name;                 // theorem mode only
  std::vector<Formula> hypotheses;  // hypothesis mode only
  std::vector<ProofLine> lines;

  static ProofScript theorem(std::string name) {
    ProofScript s;
    s.name = std::move(name);
    return s;
  }
  static ProofScript from(std::vector<Formula> hyps) {
    ProofScript s;
    s.mode = Mode::FromHypotheses;
    s.hypotheses = std::move(hyps);
    return s;
  }

  friend bool operator==(const ProofScript&, const ProofScript&) = default;
};

class ProofError : public std::runtime_error {
 public:
  ProofError(std::size_t line, std::string rule, std::string reason);
  std::size_t line() const { return line_; }  // 0-based
  const std::string& rule() const { return rule_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string rule_;
  std::string reason_;
};

class TheoremRegistry {
 public:
  // Checks `script` in theorem mode and stores its conclusion, with the atoms
  // named in `atom_to_meta` replaced by metavariables. Sound because every rule
  // and axiom is closed under uniform substitution. Throws ProofError, or
  // std::invalid_argument on a duplicate name or a hypothesis-mode script.
  void add(const std::string& name, const ProofScript& script,
           const std::map<std::string, std::string>& atom_to_meta = {});

  const Schema* find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }
  const std::map<std::string, Schema>& entries() const { return entries_; }

 private:
  std::map<std::string, Schema> entries_;
};

// Verifies every line; returns the last line's formula. Throws ProofError
// at the first bad line.
Formula check(const ProofScript& script, const TheoremRegistry& registry = {});

// Incremental construction of scripts, used by builtins and transformers.
class ScriptBuilder {
 public:
  explicit ScriptBuilder(ProofScript base) : script_(std::move(base)) {}

  std::size_t add(Formula f, Justification why);
  std::size_t axiom(Formula f, AxiomId id) { return add(std::move(f), just::Axiom{id}); }
  std::size_t taut(Formula f) { return axiom(std::move(f), AxiomId::Taut); }
  std::size_t hyp(std::size_t index);
  // Line `major` must read (line minor) -> y; adds y.
  std::size_t mp(std::size_t minor, std::size_t major);
  std::size_t nec(std::size_t line);
  std::size_t mono_d(std::size_t line);
  std::size_t mono_r(std::size_t line);
  std::size_t cite(const std::string& name, const Schema& schema, Substitution sigma);
  // From x -> y and y -> z, derives x -> z by a tautology and two MPs.
  std::size_t chain(std::size_t xy, std::size_t yz);

  const Formula& formula(std::size_t line) const { return script_.lines.at(line).formula; }
  std::size_t size() const { return script_.lines.size(); }
  const ProofScript& script() const { return script_; }
  ProofScript take() && { return std::move(script_); }

 private:
  ProofScript script_;
};

}  // namespace awarekit

#endif  // AWAREKIT_PROOF_HPP_
