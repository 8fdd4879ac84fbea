#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "awarekit/generate.hpp"

namespace awarekit {

namespace {

using Rgs = std::vector<std::uint8_t>;

void grow(Rgs& cur, std::size_t n, std::uint8_t open, std::vector<Rgs>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::uint8_t label = 0; label <= open; ++label) {
    cur.push_back(label);
    grow(cur, n, std::max<std::uint8_t>(open, label + 1), out);
    cur.pop_back();
  }
}

// Restricted growth strings of length n in lexicographic order.
const std::vector<Rgs>& growth_strings(std::size_t n) {
  static const auto table = [] {
    std::vector<std::vector<Rgs>> t;
    for (std::size_t k = 0; k <= 8; ++k) {
      std::vector<Rgs> all;
      Rgs cur;
      if (k == 0) {
        all.push_back({});
      } else {
        cur.push_back(0);
        grow(cur, k, 1, all);
      }
      t.push_back(std::move(all));
    }
    return t;
  }();
  if (n >= table.size()) throw std::invalid_argument("enumeration supports at most 8 worlds");
  return table[n];
}

constexpr std::size_t kMaxCells = 62;

}  // namespace

std::vector<Shard> enumeration_shards(const Bounds& b) {
  b.check();
  std::vector<Shard> out;
  for (std::size_t w = 1; w <= b.max_worlds; ++w) {
    for (std::size_t a = 1; a <= b.max_agents; ++a) {
      if (w * a > kMaxCells) throw std::invalid_argument("bounds too large to enumerate");
      const std::uint64_t masks = std::uint64_t{1} << (w * a);
      for (std::uint64_t p = 0; p < masks; ++p) out.push_back(Shard{w, a, p});
    }
  }
  return out;
}

std::uint64_t shard_size(const Shard& s, std::size_t prop_count) {
  std::uint64_t total = 1;
  std::size_t cells = 0;
  for (std::size_t a = 0; a < s.agent_count; ++a) {
    std::size_t k = 0;
    for (std::size_t w = 0; w < s.world_count; ++w) {
      if ((s.presence >> (a * s.world_count + w)) & 1) ++k;
    }
    total *= bell_number(k);
    cells += k;
  }
  for (std::size_t i = 0; i < prop_count; ++i) total <<= cells;
  return total;
}

ModelEnumerator::ModelEnumerator(const Bounds& b, EnumerationOptions opts)
    : bounds_(b), opts_(opts), shards_(enumeration_shards(b)) {}

ModelEnumerator::ModelEnumerator(const Bounds& b, const Shard& shard, EnumerationOptions opts)
    : bounds_(b), opts_(opts), shards_{shard} {
  b.check();
}

bool ModelEnumerator::load_shard() {
  const Shard& s = shards_[shard_pos_];
  cells_.clear();
  worlds_of_agent_.assign(s.agent_count, {});
  for (std::size_t a = 0; a < s.agent_count; ++a) {
    for (std::size_t w = 0; w < s.world_count; ++w) {
      if ((s.presence >> (a * s.world_count + w)) & 1) {
        cells_.emplace_back(a, w);
        worlds_of_agent_[a].push_back(w);
      }
    }
    growth_strings(worlds_of_agent_[a].size());
  }
  partition_digit_.assign(s.agent_count, 0);
  valuation_digit_.assign(bounds_.props.size(), 0);
  return true;
}

// Advances the odometer inside the current shard; false when it wraps.
bool ModelEnumerator::step() {
  const std::uint64_t radix = std::uint64_t{1} << cells_.size();
  for (auto& d : valuation_digit_) {
    if (++d < radix) return true;
    d = 0;
  }
  for (std::size_t a = 0; a < partition_digit_.size(); ++a) {
    if (++partition_digit_[a] < growth_strings(worlds_of_agent_[a].size()).size()) return true;
    partition_digit_[a] = 0;
  }
  return false;
}

void ModelEnumerator::build(EpistemicModel& out) const {
  const Shard& s = shards_[shard_pos_];
  out = EpistemicModel::with_dimensions(s.world_count, s.agent_count);
  for (auto [a, w] : cells_) out.presence.insert(a, w);
  for (std::size_t a = 0; a < s.agent_count; ++a) {
    const auto& worlds = worlds_of_agent_[a];
    const Rgs& rgs = growth_strings(worlds.size())[partition_digit_[a]];
    Partition blocks;
    for (std::size_t i = 0; i < worlds.size(); ++i) {
      if (rgs[i] == blocks.size()) blocks.emplace_back();
      blocks[rgs[i]].push_back(worlds[i]);
    }
    out.indist[a] = std::move(blocks);
  }
  for (std::size_t i = 0; i < bounds_.props.size(); ++i) {
    PairSet truth(s.agent_count, s.world_count);
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      if ((valuation_digit_[i] >> c) & 1) truth.insert(cells_[c].first, cells_[c].second);
    }
    out.valuation.emplace(bounds_.props[i], std::move(truth));
  }
}

bool ModelEnumerator::next(EpistemicModel& out) {
  while (shard_pos_ < shards_.size()) {
    if (!in_shard_) {
      load_shard();
      in_shard_ = true;
    } else if (!step()) {
      in_shard_ = false;
      ++shard_pos_;
      continue;
    }
    build(out);
    if (!opts_.symmetry_pruning || is_canonical(out)) return true;
  }
  return false;
}

std::vector<EpistemicModel> enumerate_models(const Bounds& b, EnumerationOptions opts) {
  std::vector<EpistemicModel> out;
  ModelEnumerator e(b, opts);
  EpistemicModel m;
  while (e.next(m)) out.push_back(m);
  return out;
}

namespace {

// Encoding of m after renaming: presence bits, then block labels (restricted
// growth order over renamed worlds), then valuation bits, all agent-major.
void encode(const EpistemicModel& m, const std::vector<std::size_t>& world_of,
            const std::vector<std::size_t>& agent_of, const std::vector<int>& block_id,
            const std::vector<const PairSet*>& props, std::vector<std::uint8_t>& key) {
  const std::size_t W = m.world_count;
  const std::size_t A = m.agent_count;
  key.clear();
  for (std::size_t a2 = 0; a2 < A; ++a2) {
    for (std::size_t w2 = 0; w2 < W; ++w2) {
      key.push_back(m.presence.contains(agent_of[a2], world_of[w2]) ? 1 : 0);
    }
  }
  std::vector<int> relabel;
  for (std::size_t a2 = 0; a2 < A; ++a2) {
    relabel.assign(W, -1);
    int next = 0;
    for (std::size_t w2 = 0; w2 < W; ++w2) {
      int id = block_id[agent_of[a2] * W + world_of[w2]];
      if (id < 0) {
        key.push_back(0);
        continue;
      }
      if (relabel[id] < 0) relabel[id] = next++;
      key.push_back(static_cast<std::uint8_t>(relabel[id] + 1));
    }
  }
  for (const PairSet* truth : props) {
    for (std::size_t a2 = 0; a2 < A; ++a2) {
      for (std::size_t w2 = 0; w2 < W; ++w2) {
        key.push_back(truth->contains(agent_of[a2], world_of[w2]) ? 1 : 0);
      }
    }
  }
}

}  // namespace

bool is_canonical(const EpistemicModel& m) {
  const std::size_t W = m.world_count;
  const std::size_t A = m.agent_count;
  std::vector<int> block_id(A * W, -1);
  for (std::size_t a = 0; a < A; ++a) {
    for (std::size_t b = 0; b < m.indist[a].size(); ++b) {
      for (std::size_t w : m.indist[a][b]) block_id[a * W + w] = static_cast<int>(b);
    }
  }
  std::vector<const PairSet*> props;
  for (const auto& [name, truth] : m.valuation) props.push_back(&truth);

  std::vector<std::size_t> world_of(W), agent_of(A);
  std::iota(world_of.begin(), world_of.end(), 0);
  std::iota(agent_of.begin(), agent_of.end(), 0);
  std::vector<std::uint8_t> base, other;
  encode(m, world_of, agent_of, block_id, props, base);

  do {
    std::iota(agent_of.begin(), agent_of.end(), 0);
    do {
      encode(m, world_of, agent_of, block_id, props, other);
      if (other < base) return false;
    } while (std::next_permutation(agent_of.begin(), agent_of.end()));
  } while (std::next_permutation(world_of.begin(), world_of.end()));
  return true;
}

}  // namespace awarekit
