#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "awarekit/generate.hpp"
#include "awarekit/model.hpp"
#include "awarekit/model_io.hpp"
#include "oracles.hpp"

using namespace awarekit;

namespace {

ModelFile museum() { return load_model_file(oracle::source_path("data/museum.model.json")); }

Bounds bounds(std::size_t w, std::size_t a, std::vector<std::string> props = {"p"}) {
  Bounds b;
  b.max_worlds = w;
  b.max_agents = a;
  b.props = std::move(props);
  return b;
}

bool has_rule(const std::vector<Violation>& vs, Rule r) {
  for (const auto& v : vs) {
    if (v.rule == r) return true;
  }
  return false;
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("museum model loads and validates") {
  const ModelFile f = museum();
  CHECK(f.model.world_count == 2);
  CHECK(f.model.agent_count == 3);
  CHECK(validate(f.model).empty());
  const std::size_t b = f.agent_index("b"), w2 = f.world_index("w2");
  CHECK_FALSE(f.model.presence.contains(b, w2));
  CHECK(f.model.presence.size() == 5);
  CHECK(present_agents(f.model, w2) == std::vector<std::size_t>{0, 2});
  CHECK(present_worlds(f.model, b) == std::vector<std::size_t>{0});
  CHECK(indistinguishable(f.model, f.agent_index("a"), 0, 1));
  CHECK_FALSE(indistinguishable(f.model, f.agent_index("c"), 0, 1));
  CHECK_THROWS_AS(indistinguishable(f.model, b, 0, 1), AgentNotPresent);
  CHECK_THROWS_AS(present_worlds(f.model, 7), std::out_of_range);
  CHECK_THROWS_AS(f.world_index("w3"), ModelFileError);
  CHECK(points(f.model) == std::vector<Point>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 2}});
}

TEST_CASE("validation names the broken rule") {
  EpistemicModel m = museum().model;
  SUBCASE("valuation outside presence") {
    m.valuation["p"] = PairSet(3, 2);
    m.valuation["p"].insert(1, 1);
    CHECK(has_rule(validate(m), Rule::ValuationPresence));
  }
  SUBCASE("block contains an absent world") {
    m.indist[1] = {{0, 1}};
    CHECK(has_rule(validate(m), Rule::Partition));
  }
  SUBCASE("present world in no block") {
    m.indist[2] = {{0}};
    CHECK(has_rule(validate(m), Rule::Partition));
  }
  SUBCASE("world in two blocks") {
    m.indist[0] = {{0, 1}, {1}};
    CHECK(has_rule(validate(m), Rule::Partition));
  }
  SUBCASE("empty block") {
    m.indist[2] = {{0}, {1}, {}};
    CHECK(has_rule(validate(m), Rule::Partition));
  }
  SUBCASE("dimensions") {
    m.indist.pop_back();
    CHECK(has_rule(validate(m), Rule::Dimensions));
  }
  CHECK_FALSE(validate(m).empty());
}

TEST_CASE("model file errors") {
  CHECK_THROWS_AS(parse_model_json("{"), ModelFileError);
  CHECK_THROWS_AS(parse_model_json(R"({"worlds": ["w"], "agents": ["a", "a"]})"), ModelFileError);
  CHECK_THROWS_AS(parse_model_json(R"({"worlds": ["w"], "agents": ["a"], "presence": [["a", "v"]]})"),
                  ModelFileError);
  CHECK_THROWS_AS(parse_model_json(R"({"worlds": ["w"], "agents": ["a"], "presence": [["a"]]})"),
                  ModelFileError);
  CHECK_THROWS_AS(parse_model_json(R"({"worlds": "w", "agents": ["a"]})"), ModelFileError);
  CHECK_THROWS_AS(load_model_file("/nonexistent/model.json"), ModelFileError);
  // Structurally fine, semantically invalid: parses, then fails validation.
  auto f = parse_model_json(
      R"({"worlds": ["w"], "agents": ["a"], "valuation": {"p": [["a", "w"]]}})");
  CHECK_FALSE(validate(f.model).empty());
}

TEST_CASE("json round trip") {
  const ModelFile f = museum();
  const ModelFile g = parse_model_json(to_json(f));
  CHECK(g.model == f.model);
  CHECK(g.world_names == f.world_names);
  CHECK(parse_model_json(to_json(g, -1)).model == f.model);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ModelFile r = ModelFile::named(random_model(seed, bounds(4, 4, {"p", "q"})));
    CHECK(parse_model_json(to_json(r)).model == r.model);
  }
}

TEST_CASE("dot export") {
  const ModelFile f = museum();
  const std::string dot = to_dot(f, {{0, 0}});
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("cluster") != std::string::npos);
  CHECK(dot.find("w1/a") != std::string::npos);
  CHECK(dot.find("w2/b") == std::string::npos);  // b is absent from w2
  CHECK(dot.find("filled") != std::string::npos);
}

TEST_CASE("bell numbers and partitions") {
  const std::uint64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (std::size_t n = 0; n < 9; ++n) CHECK(bell_number(n) == bell[n]);

  // Uniform over the five partitions of a 3-set.
  std::mt19937_64 rng(3);
  std::map<Partition, int> counts;
  const int draws = 50000;
  for (int i = 0; i < draws; ++i) counts[normalized(random_partition(rng, {0, 1, 2}))]++;
  CHECK(counts.size() == 5);
  for (const auto& [part, n] : counts) CHECK((n > draws / 5 * 0.95 && n < draws / 5 * 1.05));
}

TEST_CASE("uniform_below") {
  std::mt19937_64 rng(9);
  std::vector<int> hist(6);
  for (int i = 0; i < 60000; ++i) hist[uniform_below(rng, 6)]++;
  for (int n : hist) CHECK((n > 9500 && n < 10500));
  CHECK(uniform_below(rng, 1) == 0);
  CHECK_THROWS(uniform_below(rng, 0));
}

TEST_CASE("bounds are checked") {
  CHECK_THROWS_AS(bounds(0, 1).check(), std::invalid_argument);
  CHECK_THROWS_AS(bounds(1, 0).check(), std::invalid_argument);
  CHECK_THROWS_AS(bounds(1, 1, {}).check(), std::invalid_argument);
  CHECK_THROWS_AS(bounds(1, 1, {"p", "p"}).check(), std::invalid_argument);
  CHECK_THROWS_AS(bounds(1, 1, {"K"}).check(), std::invalid_argument);
}

TEST_CASE("random models are valid, bounded and deterministic") {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const Bounds b = bounds(1 + seed % 4, 1 + (seed / 4) % 4, {"p", "q", "r"});
    const EpistemicModel m = random_model(seed, b);
    CHECK(validate(m).empty());
    CHECK(m.world_count >= 1);
    CHECK(m.world_count <= b.max_worlds);
    CHECK(m.agent_count <= b.max_agents);
    for (std::size_t w = 0; w < m.world_count; ++w) CHECK_FALSE(present_agents(m, w).empty());
    CHECK(m.valuation.size() == 3);
    CHECK(random_model(seed, b) == m);
  }
  RandomModelOptions raw;
  raw.patch_empty_worlds = false;
  bool some_empty = false;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const EpistemicModel m = random_model(seed, bounds(4, 1), raw);
    CHECK(validate(m).empty());
    for (std::size_t w = 0; w < m.world_count; ++w) some_empty = some_empty || present_agents(m, w).empty();
  }
  CHECK(some_empty);
}

TEST_CASE("golden random models") {
  const bool update = std::getenv("AWAREKIT_UPDATE_GOLDEN") != nullptr;
  for (std::uint64_t seed : {1, 7, 42, 2024}) {
    const std::string path =
        oracle::source_path("tests/golden/random_model_" + std::to_string(seed) + ".json");
    const std::string got = to_json(ModelFile::named(random_model(seed, bounds(4, 4, {"p", "q", "r"})))) + "\n";
    if (update) std::ofstream(path) << got;
    CHECK_MESSAGE(read(path) == got, path);
  }
}

TEST_CASE("hand counts") {
  CHECK(enumerate_models(bounds(1, 1, {"p"})).size() == 3);
  CHECK(enumerate_models(bounds(1, 1, {"p", "q"})).size() == 5);
  CHECK(oracle::model_count(1, 1, 1) == 3);
  CHECK(oracle::model_count(1, 1, 2) == 5);
}

TEST_CASE("enumeration count matches the counting formula") {
  for (auto [w, a, p] : std::vector<std::tuple<int, int, int>>{
           {1, 2, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2, 2}, {3, 2, 1}, {2, 3, 1}, {1, 4, 2}, {4, 1, 1}}) {
    std::vector<std::string> props;
    for (int i = 0; i < p; ++i) props.push_back("p" + std::to_string(i));
    const Bounds b = bounds(w, a, props);
    std::uint64_t streamed = 0;
    ModelEnumerator en(b);
    EpistemicModel m;
    while (en.next(m)) ++streamed;
    std::uint64_t by_shard = 0;
    for (const Shard& s : enumeration_shards(b)) by_shard += shard_size(s, props.size());
    CHECK(streamed == oracle::model_count(w, a, p));
    CHECK(by_shard == streamed);
  }
  const Bounds big = bounds(3, 3);
  std::uint64_t by_shard = 0;
  for (const Shard& s : enumeration_shards(big)) by_shard += shard_size(s, 1);
  CHECK(by_shard == oracle::model_count(3, 3, 1));
}

TEST_CASE("enumeration order and content") {
  const Bounds b = bounds(2, 2, {"p", "q"});
  const auto all = enumerate_models(b);
  std::set<std::string> distinct;
  std::pair<std::size_t, std::size_t> last{0, 0};
  for (const auto& m : all) {
    CHECK(validate(m).empty());
    CHECK(m.valuation.size() == 2);
    const std::pair<std::size_t, std::size_t> dims{m.world_count, m.agent_count};
    CHECK(dims >= last);
    last = dims;
    distinct.insert(to_json(ModelFile::named(m), -1));
  }
  CHECK(distinct.size() == all.size());
  // The very first model is the empty one-world, one-agent model.
  CHECK(all.front().presence.empty());

  // Shards come in (worlds, agents, presence) order.
  const auto shards = enumeration_shards(bounds(2, 2));
  CHECK(std::is_sorted(shards.begin(), shards.end()));

  // Per-shard enumeration concatenates to the full stream.
  std::vector<EpistemicModel> joined;
  for (const Shard& s : enumeration_shards(b)) {
    ModelEnumerator en(b, s);
    EpistemicModel m;
    while (en.next(m)) joined.push_back(m);
  }
  CHECK(joined == all);
}

TEST_CASE("symmetry pruning keeps one model per isomorphism class") {
  for (const Bounds& b : {bounds(2, 2, {"p"}), bounds(3, 2, {"p"}), bounds(2, 3, {"p"}), bounds(2, 2, {"p", "q"})}) {
    std::set<std::string> classes;
    for (const auto& m : enumerate_models(b)) classes.insert(oracle::canonical_form(m));
    EnumerationOptions prune;
    prune.symmetry_pruning = true;
    std::set<std::string> kept;
    std::size_t n = 0;
    for (const auto& m : enumerate_models(b, prune)) {
      CHECK(is_canonical(m));
      kept.insert(oracle::canonical_form(m));
      ++n;
    }
    CHECK(kept == classes);
    CHECK(n == classes.size());
  }
}
