// Independent reference implementations used only by the tests.

#ifndef AWAREKIT_TESTS_ORACLES_HPP_
#define AWAREKIT_TESTS_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "awarekit/formula.hpp"
#include "awarekit/generate.hpp"
#include "awarekit/model.hpp"
#include "awarekit/proof.hpp"

namespace oracle {

using awarekit::EpistemicModel;
using awarekit::Formula;

// Straight transcription of the satisfaction clauses: no index, no memo.
bool naive_satisfies(const EpistemicModel& m, std::size_t world, std::size_t agent,
                     const Formula& f);
bool naive_valid_in_model(const EpistemicModel& m, const Formula& f);

// Truth table over atoms, metavariables and maximal modal subformulas.
bool truth_table_tautology(const Formula& f);

// Number of models enumerate_models(b) should produce, by counting formula.
std::uint64_t model_count(std::size_t max_worlds, std::size_t max_agents, std::size_t props);

// Isomorphism-invariant key: the least serialisation over all world and
// agent permutations.
std::string canonical_form(const EpistemicModel& m);

// Formulas over `atoms` of height <= depth, biased towards connectives.
Formula gen_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms, int depth);

// A hypothesis-mode script using only axioms, hypotheses, tautologies and MP.
awarekit::ProofScript gen_mp_proof(std::mt19937_64& rng, std::size_t hypotheses,
                                   std::size_t steps);

// A theorem-mode script exercising every rule.
awarekit::ProofScript gen_theorem_proof(std::mt19937_64& rng, std::size_t steps);

std::string source_path(const std::string& relative);

}  // namespace oracle

#endif  // AWAREKIT_TESTS_ORACLES_HPP_
