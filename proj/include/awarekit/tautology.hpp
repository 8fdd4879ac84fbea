// Propositional tautology check over the boolean abstraction of a formula.
//
// Every atom, metavariable and maximal K/R/D subformula becomes an independent
// boolean variable (structurally equal subformulas share one variable).

#ifndef AWAREKIT_TAUTOLOGY_HPP_
#define AWAREKIT_TAUTOLOGY_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "awarekit/formula.hpp"

namespace awarekit {

inline constexpr std::size_t kMaxAbstractionVariables = 20;

class TooManyVariables : public std::runtime_error {
 public:
  explicit TooManyVariables(std::size_t count);
  std::size_t count() const { return count_; }

 private:
  std::size_t count_;
};

// Abstraction variables of f in first-occurrence (left-to-right) order.
std::vector<Formula> abstraction_variables(const Formula& f);

// Throws TooManyVariables above kMaxAbstractionVariables.
bool is_tautology(const Formula& f);

}  // namespace awarekit

#endif  // AWAREKIT_TAUTOLOGY_HPP_
