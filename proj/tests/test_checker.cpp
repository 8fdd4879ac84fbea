#include <doctest.h>

#include <random>

#include "awarekit/checker.hpp"
#include "awarekit/explain.hpp"
#include "awarekit/generate.hpp"
#include "awarekit/model_io.hpp"
#include "awarekit/parser.hpp"
#include "awarekit/random_formula.hpp"
#include "oracles.hpp"

using namespace awarekit;

namespace {

ModelFile museum() { return load_model_file(oracle::source_path("data/museum.model.json")); }

bool at(const ModelFile& f, const char* world, const char* agent, const char* formula) {
  return satisfies(f.model, Point{f.world_index(world), f.agent_index(agent)}, parse(formula));
}

Bounds fuzz_bounds() {
  Bounds b;
  b.max_worlds = 4;
  b.max_agents = 4;
  b.props = {"p", "q", "r"};
  return b;
}

}  // namespace

TEST_CASE("museum judgements") {
  const ModelFile f = museum();
  CHECK(at(f, "w1", "c", "police & near"));
  CHECK(at(f, "w2", "c", "weride & near"));
  CHECK(at(f, "w1", "b", "weride & near"));
  CHECK(at(f, "w1", "a", "R(police & near)"));
  CHECK(at(f, "w1", "a", "~R(weride & near)"));
  CHECK(at(f, "w1", "a", "D(weride & near)"));
  // a is never near the museum.
  CHECK_FALSE(at(f, "w1", "a", "K near"));
  CHECK(at(f, "w1", "c", "K police"));
  CHECK_THROWS_AS(at(f, "w2", "b", "weride"), AgentNotPresent);
}

TEST_CASE("museum extensions") {
  const ModelFile f = museum();
  CHECK(extension(f.model, parse("near")) == std::set<Point>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(extension(f.model, parse("D(weride & near)")).count(Point{1, 0}));
  CHECK(valid_in_model(f.model, parse("K p -> p")));
  CHECK_FALSE(valid_in_model(f.model, parse("near")));
  // Unknown props are false everywhere.
  CHECK(extension(f.model, parse("zebra")).empty());
}

TEST_CASE("compiled formulas share subterms") {
  const CompiledFormula cf(parse("(K p -> p) & (K p -> p) | K p"));
  CHECK(cf.nodes().size() == 5);  // p, K p, K p -> p, &, |
  CHECK_THROWS_AS(CompiledFormula(parse("K Phi", Metavariables::Greek)), std::invalid_argument);
}

TEST_CASE("model index rejects broken partitions") {
  EpistemicModel m = museum().model;
  m.indist[0] = {{0}};
  CHECK_THROWS_AS(ModelIndex{m}, std::invalid_argument);
}

TEST_CASE("property: memoised checker equals the naive recursion") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1500; ++i) {
    const EpistemicModel m = random_model(rng(), fuzz_bounds());
    const Formula f = random_formula(rng, {"p", "q", "r"}, 5);
    const CompiledFormula cf(f);
    const Evaluator ev(m);
    const auto labels = ev.label(cf);
    std::optional<Point> first;
    for (const Point& pt : points(m)) {
      const bool expected = oracle::naive_satisfies(m, pt.world, pt.agent, f);
      CHECK(ev.satisfies(pt, cf) == expected);
      CHECK((labels[pt.agent * m.world_count + pt.world] != 0) == expected);
      if (!expected && !first) first = pt;
    }
    CHECK(ev.first_failure(cf) == first);
  }
}

TEST_CASE("property: classical and modal validities hold at every point") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 300; ++i) {
    const EpistemicModel m = random_model(rng(), fuzz_bounds());
    const Formula x = oracle::gen_formula(rng, {"p", "q", "r"}, 3);
    const Formula y = oracle::gen_formula(rng, {"p", "q", "r"}, 3);
    for (const Formula& f : {
             Formula::implies(Formula::neg(Formula::neg(x)), x),
             Formula::disj(x, Formula::neg(x)),
             Formula::implies(Formula::know(x), x),
             Formula::implies(x, Formula::de_re(x)),
             Formula::implies(Formula::know(x), Formula::de_dicto(x)),
             Formula::implies(Formula::de_dicto(x), Formula::know(Formula::de_dicto(x))),
             Formula::implies(Formula::de_re(Formula::disj(x, y)),
                              Formula::disj(Formula::de_re(x), Formula::de_re(y))),
             // General awareness, checked semantically.
             Formula::implies(Formula::de_dicto(awareness_tower(x, 1)), Formula::de_dicto(x)),
         }) {
      CHECK_MESSAGE(valid_in_model(m, f), render(f));
    }
  }
}

TEST_CASE("property: de re does not imply knowing it") {
  // Not valid, so random models should produce counterexamples.
  std::mt19937_64 rng(33);
  int failures = 0;
  for (int i = 0; i < 300; ++i) {
    const EpistemicModel m = random_model(rng(), fuzz_bounds());
    failures += !valid_in_model(m, parse("R p -> K R p"));
  }
  CHECK(failures > 0);
}

TEST_CASE("explanations name witnesses") {
  const ModelFile f = museum();
  const std::string re = explain(f, {0, 0}, parse("R(police & near)"));
  CHECK(re.find("witness agent c") != std::string::npos);
  const std::string dd = explain(f, {0, 0}, parse("D(weride & near)"));
  CHECK(dd.find("world w1: witness agent b") != std::string::npos);
  CHECK(dd.find("world w2: witness agent c") != std::string::npos);
  const std::string k = explain(f, {0, 0}, parse("K near"));
  CHECK(k.find("|/=") != std::string::npos);
  CHECK(k.find("w1") != std::string::npos);
  const std::string neg = explain(f, {0, 0}, parse("R(weride & near)"));
  CHECK(neg.rfind("w1,a |/= R(weride & near)", 0) == 0);
}
