// Human-readable justification of a satisfaction judgement.

#ifndef AWAREKIT_EXPLAIN_HPP_
#define AWAREKIT_EXPLAIN_HPP_

#include <cstddef>
#include <string>

#include "awarekit/formula.hpp"
#include "awarekit/model_io.hpp"

namespace awarekit {

// Indented trace naming witnesses: the de re witness agent, the per-world
// de dicto witnesses, the failing indistinguishable world, and so on.
// Recursion stops after max_depth nested judgements.
std::string explain(const ModelFile& file, Point pt, const Formula& f,
                    std::size_t max_depth = 6);

}  // namespace awarekit

#endif  // AWAREKIT_EXPLAIN_HPP_
