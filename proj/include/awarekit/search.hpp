// Bounded validity: exhaustive countermodel search over enumerate_models.
//
// A formula that survives every enumerated model is reported as valid up to
// the bounds, never as valid outright.

#ifndef AWAREKIT_SEARCH_HPP_
#define AWAREKIT_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "awarekit/formula.hpp"
#include "awarekit/generate.hpp"
#include "awarekit/model.hpp"

namespace awarekit {

struct ValidUpToBounds {
  Bounds bounds;
  std::uint64_t models_checked = 0;
};

struct Countermodel {
  EpistemicModel model;
  Point point;
};

using Verdict = std::variant<ValidUpToBounds, Countermodel>;

class AtomNotInBounds : public std::invalid_argument {
 public:
  explicit AtomNotInBounds(const std::string& atom);
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

struct SearchOptions {
  // Witnesses may differ with pruning on; the verdict kind does not.
  bool symmetry_pruning = false;
  // <= 0: default_thread_count().
  int threads = 0;
};

// Parallel over enumeration shards. The witness is the first failing
// (model, point) in enumeration order regardless of thread count.
Verdict decide_bounded(const Formula& f, const Bounds& b, SearchOptions opts = {});

// Single-threaded reference.
Verdict decide_bounded_serial(const Formula& f, const Bounds& b, SearchOptions opts = {});

std::optional<Countermodel> find_countermodel(const Formula& f, const Bounds& b,
                                              SearchOptions opts = {});

}  // namespace awarekit

#endif  // AWAREKIT_SEARCH_HPP_
