// Random and exhaustive model generation.

#ifndef AWAREKIT_GENERATE_HPP_
#define AWAREKIT_GENERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "awarekit/model.hpp"

namespace awarekit {

struct Bounds {
  std::size_t max_worlds = 1;
  std::size_t max_agents = 1;
  std::vector<std::string> props{"p"};

  // Throws std::invalid_argument unless max_worlds, max_agents >= 1 and
  // props is nonempty, duplicate-free and made of identifiers.
  void check() const;
};

// Unbiased draw from [0, n). Portable across standard libraries, unlike
// std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

// Number of set partitions of an n-element set.
std::uint64_t bell_number(std::size_t n);

// Uniformly random partition of `items`.
Partition random_partition(std::mt19937_64& rng, const std::vector<std::size_t>& items);

struct RandomModelOptions {
  // Give every world at least one present agent.
  bool patch_empty_worlds = true;
};

// Deterministic in (seed, bounds, options). Always passes validate().
EpistemicModel random_model(std::uint64_t seed, const Bounds& b,
                            RandomModelOptions opts = {});

// --- exhaustive enumeration ---
//
// Order: world_count, agent_count, presence mask, partition index, valuation
// index, each ascending. Presence bit (a * world_count + w) holds pair
// (a, w). The partition index is mixed radix over agents (agent 0 least
// significant), each digit ranking the restricted growth string of P_a.
// The valuation index is mixed radix over props (first prop least
// significant), each digit a bitmask over present pairs in agent-major order.

// A unit of enumeration work: all models with a fixed presence relation.
struct Shard {
  std::size_t world_count = 0;
  std::size_t agent_count = 0;
  std::uint64_t presence = 0;

  friend auto operator<=>(const Shard&, const Shard&) = default;
};

std::vector<Shard> enumeration_shards(const Bounds& b);

// Number of models in a shard.
std::uint64_t shard_size(const Shard& s, std::size_t prop_count);

struct EnumerationOptions {
  // Skip models that are not the canonical representative of their
  // isomorphism class under world and agent renaming.
  bool symmetry_pruning = false;
};

// Single-consumer stream of models.
class ModelEnumerator {
 public:
  explicit ModelEnumerator(const Bounds& b, EnumerationOptions opts = {});
  // Restricted to one shard.
  ModelEnumerator(const Bounds& b, const Shard& shard, EnumerationOptions opts = {});

  // Writes the next model into `out`; false when exhausted.
  bool next(EpistemicModel& out);

 private:
  bool load_shard();
  bool step();
  void build(EpistemicModel& out) const;

  Bounds bounds_;
  EnumerationOptions opts_;
  std::vector<Shard> shards_;
  std::size_t shard_pos_ = 0;
  bool in_shard_ = false;

  // Per-shard cursor.
  std::vector<std::pair<std::size_t, std::size_t>> cells_;  // present (agent, world)
  std::vector<std::vector<std::size_t>> worlds_of_agent_;
  std::vector<std::size_t> partition_digit_;
  std::vector<std::uint64_t> valuation_digit_;
};

std::vector<EpistemicModel> enumerate_models(const Bounds& b, EnumerationOptions opts = {});

// True if no renaming of worlds and agents gives a smaller encoding.
bool is_canonical(const EpistemicModel& m);

}  // namespace awarekit

#endif  // AWAREKIT_GENERATE_HPP_
