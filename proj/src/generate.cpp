#include "awarekit/generate.hpp"

#include <limits>
#include <set>
#include <stdexcept>

#include "awarekit/parser.hpp"

namespace awarekit {

void Bounds::check() const {
  if (max_worlds < 1) throw std::invalid_argument("max_worlds must be at least 1");
  if (max_agents < 1) throw std::invalid_argument("max_agents must be at least 1");
  if (props.empty()) throw std::invalid_argument("props must be nonempty");
  std::set<std::string> seen;
  for (const auto& p : props) {
    if (!is_identifier(p)) throw std::invalid_argument("bad proposition name: " + p);
    if (!seen.insert(p).second) throw std::invalid_argument("duplicate proposition: " + p);
  }
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below(0)");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n + 1) % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % n;
}

namespace {

constexpr std::size_t kMaxPartitionItems = 25;

// completions[r][m]: ways to place r further items given m open blocks.
const std::vector<std::vector<std::uint64_t>>& completions() {
  static const auto table = [] {
    const std::size_t n = kMaxPartitionItems + 1;
    std::vector<std::vector<std::uint64_t>> c(n, std::vector<std::uint64_t>(n + 1, 0));
    for (std::size_t m = 0; m <= n; ++m) c[0][m] = 1;
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t m = 0; m + r <= n; ++m) {
        c[r][m] = m * c[r - 1][m] + c[r - 1][m + 1];
      }
    }
    return c;
  }();
  return table;
}

bool coin(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

}  // namespace

std::uint64_t bell_number(std::size_t n) {
  if (n > kMaxPartitionItems) throw std::invalid_argument("bell_number: n too large");
  return completions()[n][0];
}

Partition random_partition(std::mt19937_64& rng, const std::vector<std::size_t>& items) {
  if (items.size() > kMaxPartitionItems) {
    throw std::invalid_argument("random_partition: too many items");
  }
  Partition blocks;
  const auto& c = completions();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::size_t rest = items.size() - 1 - i;
    const std::size_t open = blocks.size();
    const std::uint64_t join = c[rest][open];
    const std::uint64_t fresh = c[rest][open + 1];
    const std::uint64_t x = uniform_below(rng, open * join + fresh);
    if (x < open * join) {
      blocks[x / join].push_back(items[i]);
    } else {
      blocks.push_back({items[i]});
    }
  }
  return blocks;
}

EpistemicModel random_model(std::uint64_t seed, const Bounds& b, RandomModelOptions opts) {
  b.check();
  std::mt19937_64 rng(seed);
  const std::size_t worlds = 1 + uniform_below(rng, b.max_worlds);
  const std::size_t agents = 1 + uniform_below(rng, b.max_agents);
  EpistemicModel m = EpistemicModel::with_dimensions(worlds, agents);

  for (std::size_t a = 0; a < agents; ++a) {
    for (std::size_t w = 0; w < worlds; ++w) {
      if (coin(rng)) m.presence.insert(a, w);
    }
  }
  if (opts.patch_empty_worlds) {
    for (std::size_t w = 0; w < worlds; ++w) {
      bool occupied = false;
      for (std::size_t a = 0; a < agents; ++a) occupied = occupied || m.presence.contains(a, w);
      if (!occupied) m.presence.insert(uniform_below(rng, agents), w);
    }
  }
  for (std::size_t a = 0; a < agents; ++a) {
    m.indist[a] = random_partition(rng, present_worlds(m, a));
  }
  const auto cells = m.presence.pairs();
  for (const auto& prop : b.props) {
    PairSet truth(agents, worlds);
    for (auto [a, w] : cells) {
      if (coin(rng)) truth.insert(a, w);
    }
    m.valuation.emplace(prop, std::move(truth));
  }
  return m;
}

}  // namespace awarekit
