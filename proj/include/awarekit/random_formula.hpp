// Random formulas for fuzzing.

#ifndef AWAREKIT_RANDOM_FORMULA_HPP_
#define AWAREKIT_RANDOM_FORMULA_HPP_

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "awarekit/formula.hpp"

namespace awarekit {

// Each node kind is drawn uniformly: atoms and falsum only once `depth`
// reaches zero, otherwise any of the nine kinds (atom, falsum, ~, ->, &, |,
// K, R, D). Atoms are drawn uniformly from `atoms`, which must be nonempty.
Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                       std::size_t depth);

}  // namespace awarekit

#endif  // AWAREKIT_RANDOM_FORMULA_HPP_
