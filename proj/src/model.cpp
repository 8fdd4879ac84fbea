#include "awarekit/model.hpp"

#include <algorithm>
#include <sstream>

namespace awarekit {

std::size_t PairSet::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<std::pair<std::size_t, std::size_t>> PairSet::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < agents_; ++a) {
    for (std::size_t w = 0; w < worlds_; ++w) {
      if (bits_[a * worlds_ + w]) out.emplace_back(a, w);
    }
  }
  return out;
}

EpistemicModel EpistemicModel::with_dimensions(std::size_t worlds, std::size_t agents) {
  EpistemicModel m;
  m.world_count = worlds;
  m.agent_count = agents;
  m.presence = PairSet(agents, worlds);
  m.indist.assign(agents, {});
  return m;
}

const char* rule_description(Rule r) {
  switch (r) {
    case Rule::Dimensions:
      return "presence and valuation are relations over agents x worlds";
    case Rule::Partition:
      return "indistinguishability of each agent is an equivalence relation on the "
             "worlds where the agent is present";
    case Rule::ValuationPresence:
      return "the valuation of each proposition is a subset of presence";
  }
  return "?";
}

std::vector<Violation> validate(const EpistemicModel& m) {
  std::vector<Violation> out;
  auto report = [&](Rule r, const std::string& msg) { out.push_back({r, msg}); };

  if (m.presence.agent_count() != m.agent_count ||
      m.presence.world_count() != m.world_count) {
    report(Rule::Dimensions, "presence grid is not agent_count x world_count");
    return out;
  }
  if (m.indist.size() != m.agent_count) {
    std::ostringstream os;
    os << "indist lists " << m.indist.size() << " agents, model has " << m.agent_count;
    report(Rule::Dimensions, os.str());
  }

  for (std::size_t a = 0; a < m.indist.size() && a < m.agent_count; ++a) {
    std::vector<int> seen(m.world_count, -1);
    const Partition& blocks = m.indist[a];
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      if (blocks[bi].empty()) {
        std::ostringstream os;
        os << "agent " << a << ": block " << bi << " is empty";
        report(Rule::Partition, os.str());
      }
      for (std::size_t w : blocks[bi]) {
        std::ostringstream os;
        if (w >= m.world_count) {
          os << "agent " << a << ": block " << bi << " names world " << w
             << " out of range";
          report(Rule::Partition, os.str());
          continue;
        }
        if (seen[w] >= 0) {
          os << "agent " << a << ": world " << w << " appears in blocks " << seen[w]
             << " and " << bi;
          report(Rule::Partition, os.str());
          continue;
        }
        seen[w] = static_cast<int>(bi);
        if (!m.presence.contains(a, w)) {
          os << "agent " << a << ": block " << bi << " contains world " << w
             << " where the agent is not present";
          report(Rule::Partition, os.str());
        }
      }
    }
    for (std::size_t w = 0; w < m.world_count; ++w) {
      if (m.presence.contains(a, w) && seen[w] < 0) {
        std::ostringstream os;
        os << "agent " << a << ": present world " << w << " is in no block";
        report(Rule::Partition, os.str());
      }
    }
  }

  for (const auto& [prop, pairs] : m.valuation) {
    if (pairs.agent_count() != m.agent_count || pairs.world_count() != m.world_count) {
      report(Rule::Dimensions, "valuation of " + prop + " is not agent_count x world_count");
      continue;
    }
    for (auto [a, w] : pairs.pairs()) {
      if (!m.presence.contains(a, w)) {
        std::ostringstream os;
        os << "valuation of " << prop << " contains (agent " << a << ", world " << w
           << ") outside presence";
        report(Rule::ValuationPresence, os.str());
      }
    }
  }
  return out;
}

AgentNotPresent::AgentNotPresent(std::size_t agent, std::size_t world)
    : std::runtime_error("agent " + std::to_string(agent) + " is not present in world " +
                         std::to_string(world)),
      agent_(agent),
      world_(world) {}

std::vector<std::size_t> present_worlds(const EpistemicModel& m, std::size_t agent) {
  if (agent >= m.agent_count) throw std::out_of_range("agent index out of range");
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < m.world_count; ++w) {
    if (m.presence.contains(agent, w)) out.push_back(w);
  }
  return out;
}

std::vector<std::size_t> present_agents(const EpistemicModel& m, std::size_t world) {
  if (world >= m.world_count) throw std::out_of_range("world index out of range");
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < m.agent_count; ++a) {
    if (m.presence.contains(a, world)) out.push_back(a);
  }
  return out;
}

bool indistinguishable(const EpistemicModel& m, std::size_t agent, std::size_t w,
                       std::size_t u) {
  if (agent >= m.agent_count || w >= m.world_count || u >= m.world_count) {
    throw std::out_of_range("index out of range");
  }
  if (!m.presence.contains(agent, w)) throw AgentNotPresent(agent, w);
  if (!m.presence.contains(agent, u)) throw AgentNotPresent(agent, u);
  for (const auto& block : m.indist.at(agent)) {
    bool has_w = std::find(block.begin(), block.end(), w) != block.end();
    bool has_u = std::find(block.begin(), block.end(), u) != block.end();
    if (has_w || has_u) return has_w && has_u;
  }
  return false;
}

std::vector<Point> points(const EpistemicModel& m) {
  std::vector<Point> out;
  for (std::size_t w = 0; w < m.world_count; ++w) {
    for (std::size_t a = 0; a < m.agent_count; ++a) {
      if (m.presence.contains(a, w)) out.push_back({w, a});
    }
  }
  return out;
}

Partition normalized(Partition p) {
  for (auto& block : p) std::sort(block.begin(), block.end());
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace awarekit
