// Derivations generated by unrolling inductive arguments to a fixed depth.
//
//   positive_introspection   K p -> K K p
//   lemma_A(n)               D Aⁿp -> D p
//   unaware_top(n)           ~Aⁿ~true
//   mono_A(m, n), n >= m     Aᵐp -> Aⁿp
//
// All scripts are theorem mode and use the atom p; registry entries
// generalise p to the metavariable Phi.

#ifndef AWAREKIT_BUILTIN_HPP_
#define AWAREKIT_BUILTIN_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "awarekit/proof.hpp"

namespace awarekit {

inline constexpr const char* kBuiltinAtom = "p";
inline constexpr const char* kBuiltinMeta = "Phi";

std::vector<std::string> builtin_names();

// Throws std::invalid_argument for unknown names or bad parameters.
ProofScript builtin(const std::string& name, const std::vector<std::size_t>& params = {});

// "lemma_A_2", "mono_A_1_3", "positive_introspection", ...
std::string builtin_theorem_name(const std::string& name, const std::vector<std::size_t>& params);

// Every builtin with parameters up to max_n, generalised over p.
TheoremRegistry default_registry(std::size_t max_n = 4);

}  // namespace awarekit

#endif  // AWAREKIT_BUILTIN_HPP_
