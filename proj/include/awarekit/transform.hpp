// Constructive proof transformations. Outputs are ordinary scripts and are
// re-checked by their callers; nothing here is trusted.

#ifndef AWAREKIT_TRANSFORM_HPP_
#define AWAREKIT_TRANSFORM_HPP_

#include <cstddef>
#include <string>

#include "awarekit/proof.hpp"

namespace awarekit {

// X, phi |- psi  ==>  X |- phi -> psi, where phi = hypotheses[discharged].
// The output drops that hypothesis and keeps the others in order.
// Throws ProofError if the input does not check, std::invalid_argument if it
// is not a hypothesis-mode script or the index is out of range.
ProofScript deduction(const ProofScript& script, std::size_t discharged,
                      const TheoremRegistry& registry = {});

// phi_1..phi_n |- psi  ==>  K phi_1..K phi_n |- K psi.
// Necessitation is not available under hypotheses, so the closed theorem
// K(phi_1 -> ... -> phi_n -> psi) is registered in `registry` under a fresh
// name (prefix "lifted_") and cited.
ProofScript lift_knowledge(const ProofScript& script, TheoremRegistry& registry);

// |- phi  ==>  {} |- phi, as a one-line citation of a registered theorem.
ProofScript as_hypothesis_proof(const std::string& theorem, const Substitution& sigma,
                                const TheoremRegistry& registry);

}  // namespace awarekit

#endif  // AWAREKIT_TRANSFORM_HPP_
