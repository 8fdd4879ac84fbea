// Randomised soundness testing: axiom instances must hold at every point of
// every random model.

#ifndef AWAREKIT_FUZZ_HPP_
#define AWAREKIT_FUZZ_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "awarekit/generate.hpp"
#include "awarekit/model.hpp"
#include "awarekit/schema.hpp"

namespace awarekit {

struct NamedSchema {
  std::string name;
  Schema schema;
};

// The ten schematic axioms, named by their proof-file keywords.
std::vector<NamedSchema> soundness_schemas();

struct FuzzViolation {
  EpistemicModel model;
  Point point;
  std::string schema;
  Substitution sigma;
};

struct FuzzReport {
  std::uint64_t trials = 0;
  // One per (model, schema, substitution); each is checked at every point.
  std::uint64_t schema_instances_checked = 0;
  std::vector<FuzzViolation> violations;
};

struct FuzzOptions {
  std::size_t instances_per_schema = 10;
  std::vector<NamedSchema> schemas = soundness_schemas();
  // <= 0: default_thread_count(). Ignored by the serial version.
  int threads = 0;
};

// Seed of the i-th trial's model. Formulas for the trial come from a second
// stream derived from the same value.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t i);

// Throws std::invalid_argument if trials == 0. Deterministic in its inputs;
// violations are listed by trial, then schema, then instance.
FuzzReport fuzz_soundness(std::uint64_t trials, std::uint64_t seed, const Bounds& b,
                          std::size_t pool_depth, const FuzzOptions& opts = {});

FuzzReport fuzz_soundness_serial(std::uint64_t trials, std::uint64_t seed, const Bounds& b,
                                 std::size_t pool_depth, const FuzzOptions& opts = {});

}  // namespace awarekit

#endif  // AWAREKIT_FUZZ_HPP_
