// Epistemic models: worlds, agents, presence, per-agent indistinguishability
// partitions and a valuation over (agent, world) pairs.
//
// Worlds and agents are dense indices. Names belong to the file layer
// (model_io.hpp).

#ifndef AWAREKIT_MODEL_HPP_
#define AWAREKIT_MODEL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace awarekit {

struct Point {
  std::size_t world = 0;
  std::size_t agent = 0;

  // Worlds first, then agents: the order in which points are scanned.
  friend auto operator<=>(const Point&, const Point&) = default;
};

// A subset of agents x worlds, stored as a dense grid.
class PairSet {
 public:
  PairSet() = default;
  PairSet(std::size_t agent_count, std::size_t world_count)
      : agents_(agent_count), worlds_(world_count), bits_(agent_count * world_count, 0) {}

  std::size_t agent_count() const { return agents_; }
  std::size_t world_count() const { return worlds_; }

  bool contains(std::size_t agent, std::size_t world) const {
    return agent < agents_ && world < worlds_ && bits_[agent * worlds_ + world] != 0;
  }
  void insert(std::size_t agent, std::size_t world) { bits_.at(agent * worlds_ + world) = 1; }
  void erase(std::size_t agent, std::size_t world) { bits_.at(agent * worlds_ + world) = 0; }

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  // (agent, world) pairs, agent-major.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  std::size_t agents_ = 0;
  std::size_t worlds_ = 0;
  std::vector<std::uint8_t> bits_;
};

// Blocks of worlds. Generators emit blocks sorted internally and by first element.
using Partition = std::vector<std::vector<std::size_t>>;

struct EpistemicModel {
  std::size_t world_count = 0;
  std::size_t agent_count = 0;
  PairSet presence;
  std::vector<Partition> indist;  // indexed by agent
  std::map<std::string, PairSet> valuation;

  // A model with the given dimensions, no presence and empty partitions.
  static EpistemicModel with_dimensions(std::size_t worlds, std::size_t agents);

  friend bool operator==(const EpistemicModel&, const EpistemicModel&) = default;
};

enum class Rule {
  Dimensions,        // grids and partition lists sized to the model
  Partition,         // indist[a] partitions exactly P_a
  ValuationPresence  // every valuation pair lies in presence
};

const char* rule_description(Rule r);

struct Violation {
  Rule rule;
  std::string message;  // names the offending indices
};

// Empty iff the model is well formed.
std::vector<Violation> validate(const EpistemicModel& m);

class AgentNotPresent : public std::runtime_error {
 public:
  AgentNotPresent(std::size_t agent, std::size_t world);
  std::size_t agent() const { return agent_; }
  std::size_t world() const { return world_; }

 private:
  std::size_t agent_;
  std::size_t world_;
};

// Throw std::out_of_range for bad indices.
std::vector<std::size_t> present_worlds(const EpistemicModel& m, std::size_t agent);
std::vector<std::size_t> present_agents(const EpistemicModel& m, std::size_t world);

// Same block of indist[agent]. Throws AgentNotPresent unless both worlds are in P_agent.
bool indistinguishable(const EpistemicModel& m, std::size_t agent, std::size_t w,
                       std::size_t u);

// Every present (world, agent) point in scan order.
std::vector<Point> points(const EpistemicModel& m);

// Sorts blocks and their members.
Partition normalized(Partition p);

}  // namespace awarekit

#endif  // AWAREKIT_MODEL_HPP_
