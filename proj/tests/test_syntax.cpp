#include <doctest.h>

#include <algorithm>
#include <random>

#include "awarekit/formula.hpp"
#include "awarekit/parser.hpp"
#include "awarekit/proof.hpp"
#include "awarekit/random_formula.hpp"
#include "awarekit/schema.hpp"
#include "oracles.hpp"

using namespace awarekit;
using F = Formula;

namespace {

F p = F::atom("p"), q = F::atom("q"), r = F::atom("r");

ParseError parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for \"" << text << "\"");
  return ParseError(0, {}, "");
}

bool expects(const ParseError& e, const std::string& token) {
  return std::find(e.expected().begin(), e.expected().end(), token) != e.expected().end();
}

}  // namespace

TEST_CASE("precedence and associativity") {
  CHECK(parse("p -> q -> r") == F::implies(p, F::implies(q, r)));
  CHECK(parse("(p -> q) -> r") == F::implies(F::implies(p, q), r));
  CHECK(parse("p | q & r") == F::disj(p, F::conj(q, r)));
  CHECK(parse("p & q | r") == F::disj(F::conj(p, q), r));
  CHECK(parse("p & q & r") == F::conj(F::conj(p, q), r));
  CHECK(parse("p | q -> r") == F::implies(F::disj(p, q), r));
  CHECK(parse("~K p") == F::neg(F::know(p)));
  CHECK(parse("K ~p -> R D p") == F::implies(F::know(F::neg(p)), F::de_re(F::de_dicto(p))));
  CHECK(parse("K(p -> q)") == F::know(F::implies(p, q)));
  CHECK(parse("  ((p))  ") == p);
}

TEST_CASE("sugar: A and true") {
  CHECK(parse("A p") == F::disj(F::de_re(p), F::de_dicto(p)));
  CHECK(parse("A A p") == awareness_tower(p, 2));
  CHECK(parse("true") == F::neg(F::falsum()));
  CHECK(parse("false") == F::falsum());
  CHECK(F::truth() == parse("~false"));
}

TEST_CASE("identifiers") {
  CHECK(parse("weride_2") == F::atom("weride_2"));
  CHECK(parse("Kp") == F::atom("Kp"));
  CHECK(is_identifier("near"));
  CHECK_FALSE(is_identifier("K"));
  CHECK_FALSE(is_identifier("true"));
  CHECK_FALSE(is_identifier("2p"));
  CHECK_FALSE(is_identifier(""));
}

TEST_CASE("parse errors carry offset and expected tokens") {
  auto e = parse_error("K p ->");
  CHECK(e.offset() == 7);
  CHECK(e.found() == "end of input");
  CHECK(expects(e, "\"(\""));
  CHECK(expects(e, "identifier"));

  e = parse_error("p q");
  CHECK(e.offset() == 3);
  CHECK(expects(e, "\"->\""));
  CHECK(expects(e, "end of input"));

  e = parse_error("");
  CHECK(e.offset() == 1);

  e = parse_error("(p & q");
  CHECK(e.offset() == 7);
  CHECK(expects(e, "\")\""));

  e = parse_error("p & & q");
  CHECK(e.offset() == 5);

  e = parse_error("p # q");
  CHECK(e.offset() == 3);

  CHECK_THROWS_AS(parse("K"), ParseError);
  CHECK_THROWS_AS(parse("p ->"), ParseError);
  // Greek names are plain atoms unless metavariables are requested.
  CHECK(parse("Phi") == F::atom("Phi"));
}

TEST_CASE("rendering") {
  CHECK(render(parse("(p -> q) -> r")) == "(p -> q) -> r");
  CHECK(render(parse("p -> (q -> r)")) == "p -> q -> r");
  CHECK(render(parse("~(p & q)")) == "~(p & q)");
  CHECK(render(parse("K (p -> q)")) == "K(p -> q)");
  CHECK(render(parse("K ~ p")) == "K ~p");
  CHECK(render(parse("(p | q) & r")) == "(p | q) & r");
  CHECK(render(parse("p & (q & r)")) == "p & (q & r)");
  CHECK(render(parse("A p")) == "R p | D p");
}

TEST_CASE("property: parse(render(f)) == f") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 3000; ++i) {
    const F f = oracle::gen_formula(rng, {"p", "q", "weride"}, 6);
    const std::string text = render(f);
    CHECK_MESSAGE(parse(text) == f, text);
    CHECK(render(parse(text)) == text);
  }
}

TEST_CASE("property: round trip with metavariables") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    const F f = instantiate(Schema::parse("Phi -> K(Psi | Phi1)"),
                            {{"Phi", random_formula(rng, {"p"}, 2)},
                             {"Psi", F::meta("Psi")},
                             {"Phi1", F::meta("Chi_2")}});
    CHECK(parse(render(f), Metavariables::Greek) == f);
  }
}

TEST_CASE("metavariable names") {
  for (const char* s : {"Phi", "Psi", "Chi", "Alpha", "Omega", "Phi2", "Psi_1"}) {
    CHECK_MESSAGE(is_metavariable_name(s), s);
  }
  for (const char* s : {"phi", "p", "Ph", "PhiX", "Phix", "K"}) CHECK_MESSAGE(!is_metavariable_name(s), s);
  CHECK(parse("Phi -> p", Metavariables::Greek) == F::implies(F::meta("Phi"), p));
}

TEST_CASE("awareness tower") {
  CHECK(awareness_tower(p, 0) == p);
  CHECK(awareness_tower(p, 1) == F::disj(F::de_re(p), F::de_dicto(p)));
  for (std::size_t n = 0; n < 8; ++n) {
    const F t = awareness_tower(p, n);
    CHECK(t.modal_depth() == n);
    // size(A x) = 2 size(x) + 3
    CHECK(t.size() == (std::size_t{4} << n) - 3);
    if (n > 0) CHECK(t.child().child() == awareness_tower(p, n - 1));
  }
}

TEST_CASE("structural queries") {
  const F f = parse("K p -> p");
  CHECK(subformula_closure(f) == std::set<F>{p, F::know(p), f});
  CHECK(atoms_of(parse("R(q & p) | D ~near")) == std::set<std::string>{"near", "p", "q"});
  CHECK(f.depth() == 2);
  CHECK(f.size() == 4);
  CHECK(parse("K R D p").modal_depth() == 3);
  CHECK_FALSE(f.has_metavariables());
  CHECK(Schema::parse("K Phi -> Phi").pattern().has_metavariables());
  CHECK(F() == F::falsum());
  CHECK(parse("p & q") != parse("q & p"));
  CHECK(std::hash<F>{}(parse("K(p | q)")) == std::hash<F>{}(parse("K (p|q)")));
}

TEST_CASE("schema matching and instantiation") {
  const Schema truth = axiom_schema(AxiomId::Truth);
  auto s = match_schema(truth, parse("K(q | r) -> q | r"));
  REQUIRE(s);
  CHECK(s->at("Phi") == parse("q | r"));
  CHECK_FALSE(match_schema(truth, parse("K q -> r")));
  CHECK_FALSE(match_schema(axiom_schema(AxiomId::Dist), parse("K(p -> q) -> K p -> K r")));
  CHECK(match_schema(axiom_schema(AxiomId::UnawareFalseR), parse("~R false")));
  CHECK_FALSE(match_schema(axiom_schema(AxiomId::UnawareFalseR), parse("~R p")));
  CHECK_THROWS_AS(instantiate(truth, {}), UnboundMetavariable);
  CHECK(generalize(parse("K p -> p"), {{"p", "Phi"}}) == truth);
  CHECK(render(Substitution{{"Phi", p}, {"Psi", parse("K q")}}) == "[Phi=p, Psi=K q]");
}

TEST_CASE("property: matching recovers the substitution") {
  std::mt19937_64 rng(13);
  for (AxiomId id : schematic_axioms()) {
    const Schema& s = axiom_schema(id);
    for (int i = 0; i < 100; ++i) {
      Substitution sigma;
      for (const auto& mv : metavariables_of(s.pattern())) {
        sigma[mv] = oracle::gen_formula(rng, {"p", "q"}, 3);
      }
      const F inst = instantiate(s, sigma);
      CHECK_FALSE(inst.has_metavariables());
      auto back = match_schema(s, inst);
      REQUIRE(back);
      CHECK(instantiate(s, *back) == inst);
      if (metavariables_of(s.pattern()).size() == sigma.size()) CHECK(*back == sigma);
    }
  }
}

TEST_CASE("random_formula respects depth and atoms") {
  std::mt19937_64 rng(14);
  std::map<Kind, int> seen;
  for (int i = 0; i < 2000; ++i) {
    const F f = random_formula(rng, {"p", "q"}, 3);
    CHECK(f.depth() <= 3);
    for (const auto& a : atoms_of(f)) CHECK((a == "p" || a == "q"));
    ++seen[f.kind()];
  }
  // Nine kinds, drawn uniformly at the root.
  CHECK(seen.size() == 9);
  for (const auto& [k, n] : seen) CHECK((n > 2000 / 9 - 80 && n < 2000 / 9 + 80));
  std::mt19937_64 a(5), b(5);
  CHECK(random_formula(a, {"p"}, 4) == random_formula(b, {"p"}, 4));
}
