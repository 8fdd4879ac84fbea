#include <doctest.h>

#include <random>

#include "awarekit/checker.hpp"
#include "awarekit/fuzz.hpp"
#include "awarekit/parser.hpp"
#include "awarekit/random_formula.hpp"
#include "awarekit/search.hpp"
#include "oracles.hpp"

using namespace awarekit;

namespace {

Bounds bounds(std::size_t w, std::size_t a, std::vector<std::string> props = {"p"}) {
  Bounds b;
  b.max_worlds = w;
  b.max_agents = a;
  b.props = std::move(props);
  return b;
}

const Countermodel* witness(const Verdict& v) { return std::get_if<Countermodel>(&v); }

// First failing (model, point) by a plain scan of the full enumeration.
std::optional<Countermodel> linear_scan(const Formula& f, const Bounds& b) {
  for (const EpistemicModel& m : enumerate_models(b)) {
    for (const Point& pt : points(m)) {
      if (!oracle::naive_satisfies(m, pt.world, pt.agent, f)) return Countermodel{m, pt};
    }
  }
  return std::nullopt;
}

void same_verdict(const Verdict& a, const Verdict& b) {
  REQUIRE(a.index() == b.index());
  if (const auto* x = std::get_if<ValidUpToBounds>(&a)) {
    CHECK(x->models_checked == std::get<ValidUpToBounds>(b).models_checked);
  } else {
    CHECK(std::get<Countermodel>(a).model == std::get<Countermodel>(b).model);
    CHECK(std::get<Countermodel>(a).point == std::get<Countermodel>(b).point);
  }
}

}  // namespace

TEST_CASE("non-theorems have countermodels") {
  for (auto [text, b] : std::vector<std::pair<const char*, Bounds>>{
           {"R p -> K R p", bounds(3, 3)}, {"D p -> R p", bounds(2, 3)}, {"false", bounds(1, 1)}}) {
    const Formula f = parse(text);
    const Verdict v = decide_bounded(f, b);
    const Countermodel* c = witness(v);
    REQUIRE_MESSAGE(c, text);
    CHECK_FALSE(oracle::naive_satisfies(c->model, c->point.world, c->point.agent, f));
    CHECK_FALSE(c->model.presence.empty());
    CHECK(find_countermodel(f, b).has_value());
  }
}

TEST_CASE("D without R: the witness shows de dicto but not de re awareness") {
  const auto c = find_countermodel(parse("D p -> R p"), bounds(2, 3));
  REQUIRE(c);
  CHECK(satisfies(c->model, c->point, parse("D p")));
  CHECK_FALSE(satisfies(c->model, c->point, parse("R p")));
}

TEST_CASE("valid formulas survive every model") {
  const Verdict v = decide_bounded(parse("K p -> p"), bounds(3, 3));
  REQUIRE(std::holds_alternative<ValidUpToBounds>(v));
  CHECK(std::get<ValidUpToBounds>(v).models_checked == oracle::model_count(3, 3, 1));
  CHECK_FALSE(find_countermodel(parse("p -> R p"), bounds(3, 3)));
  for (std::size_t w = 1; w <= 3; ++w) {
    CHECK(std::holds_alternative<ValidUpToBounds>(decide_bounded(parse("true"), bounds(w, 4 - w))));
  }
}

TEST_CASE("atoms must be covered by the bounds") {
  CHECK_THROWS_AS(decide_bounded(parse("p -> q"), bounds(1, 1)), AtomNotInBounds);
  CHECK_THROWS_AS(decide_bounded_serial(parse("q"), bounds(1, 1)), AtomNotInBounds);
  CHECK_THROWS_AS(decide_bounded(parse("p"), bounds(0, 1)), std::invalid_argument);
}

TEST_CASE("witness is the first failure in enumeration order") {
  std::mt19937_64 rng(51);
  const Bounds b = bounds(2, 2, {"p", "q"});
  int countermodels = 0;
  for (int i = 0; i < 150; ++i) {
    const Formula f = random_formula(rng, {"p", "q"}, 3);
    const auto expected = linear_scan(f, b);
    const Verdict v = decide_bounded_serial(f, b);
    REQUIRE((witness(v) != nullptr) == expected.has_value());
    if (expected) {
      ++countermodels;
      CHECK(witness(v)->model == expected->model);
      CHECK(witness(v)->point == expected->point);
    }
  }
  CHECK(countermodels > 30);
}

TEST_CASE("parallel search matches the serial reference") {
  std::mt19937_64 rng(52);
  const Bounds b = bounds(3, 2, {"p", "q"});
  for (int i = 0; i < 40; ++i) {
    const Formula f = random_formula(rng, {"p", "q"}, 3);
    const Verdict serial = decide_bounded_serial(f, b);
    for (int threads : {1, 2, 3, 8}) {
      SearchOptions opts;
      opts.threads = threads;
      same_verdict(serial, decide_bounded(f, b, opts));
    }
  }
}

TEST_CASE("property: countermodels persist under larger bounds") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 60; ++i) {
    const Formula f = random_formula(rng, {"p"}, 3);
    if (!find_countermodel(f, bounds(2, 2))) continue;
    CHECK(find_countermodel(f, bounds(3, 2)));
    CHECK(find_countermodel(f, bounds(2, 3)));
    CHECK(find_countermodel(f, bounds(2, 2, {"p", "q"})));
  }
}

TEST_CASE("property: pruning never changes the verdict kind") {
  std::mt19937_64 rng(54);
  SearchOptions prune;
  prune.symmetry_pruning = true;
  for (int i = 0; i < 80; ++i) {
    const Formula f = random_formula(rng, {"p"}, 4);
    const Verdict a = decide_bounded(f, bounds(3, 2));
    const Verdict b = decide_bounded(f, bounds(3, 2), prune);
    CHECK(a.index() == b.index());
    if (const Countermodel* c = witness(b)) {
      CHECK_FALSE(oracle::naive_satisfies(c->model, c->point.world, c->point.agent, f));
    }
  }
  for (AxiomId id : schematic_axioms()) {
    Substitution sigma;
    for (const auto& mv : metavariables_of(axiom_schema(id).pattern())) sigma[mv] = Formula::atom("p");
    const Verdict v = decide_bounded(instantiate(axiom_schema(id), sigma), bounds(3, 3), prune);
    REQUIRE(std::holds_alternative<ValidUpToBounds>(v));
    CHECK(std::get<ValidUpToBounds>(v).models_checked < oracle::model_count(3, 3, 1));
  }
}

TEST_CASE("fuzzing the axioms finds nothing") {
  const FuzzReport r = fuzz_soundness(200, 42, bounds(4, 4, {"p", "q", "r"}), 3);
  CHECK(r.trials == 200);
  CHECK(r.schema_instances_checked == 200 * 10 * 10);
  CHECK(r.violations.empty());
}

TEST_CASE("fuzzing is deterministic and thread-independent") {
  const Bounds b = bounds(3, 3, {"p", "q"});
  FuzzOptions opts;
  opts.schemas.push_back({"bogus", Schema::parse("D Phi -> R Phi")});
  const FuzzReport serial = fuzz_soundness_serial(120, 7, b, 2, opts);
  for (int threads : {1, 2, 5}) {
    opts.threads = threads;
    const FuzzReport par = fuzz_soundness(120, 7, b, 2, opts);
    CHECK(par.trials == serial.trials);
    CHECK(par.schema_instances_checked == serial.schema_instances_checked);
    REQUIRE(par.violations.size() == serial.violations.size());
    for (std::size_t i = 0; i < par.violations.size(); ++i) {
      CHECK(par.violations[i].model == serial.violations[i].model);
      CHECK(par.violations[i].point == serial.violations[i].point);
      CHECK(par.violations[i].sigma == serial.violations[i].sigma);
    }
  }
  CHECK(trial_seed(7, 0) != trial_seed(7, 1));
  CHECK(trial_seed(7, 0) != trial_seed(8, 0));
}

TEST_CASE("a corrupted schema is caught") {
  FuzzOptions opts;
  opts.schemas = {{"corrupt", Schema::parse("D Phi -> R Phi")}};
  const FuzzReport r = fuzz_soundness(300, 1, bounds(4, 4, {"p", "q", "r"}), 2, opts);
  REQUIRE_FALSE(r.violations.empty());
  for (const FuzzViolation& v : r.violations) {
    CHECK(v.schema == "corrupt");
    const Formula inst = instantiate(opts.schemas[0].schema, v.sigma);
    CHECK_FALSE(oracle::naive_satisfies(v.model, v.point.world, v.point.agent, inst));
  }
}

TEST_CASE("fuzzing needs a trial") {
  CHECK_THROWS_AS(fuzz_soundness(0, 1, bounds(1, 1), 1), std::invalid_argument);
  CHECK_THROWS_AS(fuzz_soundness_serial(0, 1, bounds(1, 1), 1), std::invalid_argument);
}
