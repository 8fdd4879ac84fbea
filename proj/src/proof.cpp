#include "awarekit/proof.hpp"

#include <array>

#include "awarekit/parser.hpp"
#include "awarekit/tautology.hpp"

namespace awarekit {

namespace {

struct AxiomEntry {
  AxiomId id;
  const char* keyword;
  const char* schema;
};

constexpr std::array<AxiomEntry, 11> kAxioms = {{
    {AxiomId::Taut, "taut", nullptr},
    {AxiomId::Truth, "truth", "K Phi -> Phi"},
    {AxiomId::NegIntro, "negintro", "~K Phi -> K ~K Phi"},
    {AxiomId::Dist, "dist", "K(Phi -> Psi) -> (K Phi -> K Psi)"},
    {AxiomId::SelfAwareR, "selfR", "Phi -> R Phi"},
    {AxiomId::SelfAwareD, "selfD", "K Phi -> D Phi"},
    {AxiomId::IntroAware, "introaware", "D Phi -> K D Phi"},
    {AxiomId::UnawareFalseR, "unfalseR", "~R false"},
    {AxiomId::UnawareFalseD, "unfalseD", "~D false"},
    {AxiomId::Disj, "disj", "R(Phi | Psi) -> R Phi | R Psi"},
    {AxiomId::GenAware, "genaware", "D(R Phi | D Phi) -> D Phi"},
}};

const std::vector<Schema>& schemas() {
  static const auto table = [] {
    std::vector<Schema> out;
    for (const auto& e : kAxioms) {
      out.push_back(e.schema ? Schema::parse(e.schema) : Schema());
    }
    return out;
  }();
  return table;
}

bool is_implication(const Formula& f, const Formula& lhs, const Formula& rhs) {
  return f.kind() == Kind::Implies && f.lhs() == lhs && f.rhs() == rhs;
}

struct LineChecker {
  const ProofScript& script;
  const TheoremRegistry& registry;
  std::size_t k;
  const std::string rule;

  [[noreturn]] void fail(const std::string& reason) const { throw ProofError(k, rule, reason); }

  const Formula& earlier(std::size_t i) const {
    if (i >= k) fail("refers to line " + std::to_string(i + 1) + ", which is not earlier");
    return script.lines[i].formula;
  }

  void require_theorem_mode() const {
    if (script.mode != ProofScript::Mode::Theorem) {
      fail("only modus ponens is allowed when deriving from hypotheses");
    }
  }

  void operator()(const just::Axiom& j) const {
    const Formula& f = script.lines[k].formula;
    if (j.id == AxiomId::Taut) {
      bool ok = false;
      try {
        ok = is_tautology(f);
      } catch (const TooManyVariables& e) {
        fail(e.what());
      }
      if (!ok) fail("not a propositional tautology");
      return;
    }
    if (!match_schema(axiom_schema(j.id), f)) {
      fail("not an instance of " + render(axiom_schema(j.id).pattern()));
    }
  }

  void operator()(const just::Hyp& j) const {
    if (script.mode != ProofScript::Mode::FromHypotheses) {
      fail("hypotheses are not available in theorem mode");
    }
    if (j.index >= script.hypotheses.size()) {
      fail("no hypothesis " + std::to_string(j.index + 1));
    }
    if (!(script.hypotheses[j.index] == script.lines[k].formula)) {
      fail("formula differs from hypothesis " + std::to_string(j.index + 1));
    }
  }

  void operator()(const just::MP& j) const {
    const Formula& minor = earlier(j.minor);
    const Formula& major = earlier(j.major);
    if (!is_implication(major, minor, script.lines[k].formula)) {
      fail("line " + std::to_string(j.major + 1) + " is not line " +
           std::to_string(j.minor + 1) + " -> this line");
    }
  }

  void operator()(const just::Nec& j) const {
    require_theorem_mode();
    const Formula& prem = earlier(j.line);
    const Formula& f = script.lines[k].formula;
    if (f.kind() != Kind::Know || !(f.child() == prem)) {
      fail("expected K applied to line " + std::to_string(j.line + 1));
    }
  }

  void mono(std::size_t line, Kind modality) const {
    require_theorem_mode();
    const Formula& prem = earlier(line);
    if (prem.kind() != Kind::Implies) {
      fail("line " + std::to_string(line + 1) + " is not an implication");
    }
    const Formula& f = script.lines[k].formula;
    if (f.kind() != Kind::Implies || f.lhs().kind() != modality ||
        f.rhs().kind() != modality || !(f.lhs().child() == prem.lhs()) ||
        !(f.rhs().child() == prem.rhs())) {
      fail(std::string("expected ") + kind_name(modality) + "x -> " + kind_name(modality) +
           "y from line " + std::to_string(line + 1));
    }
  }
  void operator()(const just::MonoD& j) const { mono(j.line, Kind::DeDicto); }
  void operator()(const just::MonoR& j) const { mono(j.line, Kind::DeRe); }

  void operator()(const just::Cite& j) const {
    const Schema* s = registry.find(j.name);
    if (s == nullptr) fail("unknown theorem " + j.name);
    const auto metas = metavariables_of(s->pattern());
    for (const auto& [name, _] : j.sigma) {
      if (!metas.count(name)) fail("theorem " + j.name + " has no metavariable " + name);
    }
    Formula inst;
    try {
      inst = instantiate(*s, j.sigma);
    } catch (const UnboundMetavariable& e) {
      fail(e.what());
    }
    if (!(inst == script.lines[k].formula)) {
      fail("theorem " + j.name + " instantiates to " + render(inst));
    }
  }
};

}  // namespace

const char* axiom_keyword(AxiomId id) { return kAxioms[static_cast<std::size_t>(id)].keyword; }

std::optional<AxiomId> axiom_from_keyword(std::string_view word) {
  for (const auto& e : kAxioms) {
    if (word == e.keyword) return e.id;
  }
  return std::nullopt;
}

const Schema& axiom_schema(AxiomId id) {
  if (id == AxiomId::Taut) throw std::invalid_argument("tautologies have no schema");
  return schemas()[static_cast<std::size_t>(id)];
}

const std::vector<AxiomId>& schematic_axioms() {
  static const std::vector<AxiomId> ids = {
      AxiomId::Truth,         AxiomId::NegIntro,      AxiomId::Dist, AxiomId::SelfAwareR,
      AxiomId::SelfAwareD,    AxiomId::IntroAware,    AxiomId::UnawareFalseR,
      AxiomId::UnawareFalseD, AxiomId::Disj,          AxiomId::GenAware};
  return ids;
}

std::string rule_name(const Justification& j) {
  struct {
    std::string operator()(const just::Axiom& a) const { return axiom_keyword(a.id); }
    std::string operator()(const just::Hyp&) const { return "hyp"; }
    std::string operator()(const just::MP&) const { return "mp"; }
    std::string operator()(const just::Nec&) const { return "nec"; }
    std::string operator()(const just::MonoD&) const { return "monoD"; }
    std::string operator()(const just::MonoR&) const { return "monoR"; }
    std::string operator()(const just::Cite&) const { return "cite"; }
  } v;
  return std::visit(v, j);
}

ProofError::ProofError(std::size_t line, std::string rule, std::string reason)
    : std::runtime_error("line " + std::to_string(line + 1) + " (" + rule + "): " + reason),
      line_(line),
      rule_(std::move(rule)),
      reason_(std::move(reason)) {}

Formula check(const ProofScript& script, const TheoremRegistry& registry) {
  if (script.lines.empty()) throw ProofError(0, "script", "proof has no lines");
  for (std::size_t k = 0; k < script.lines.size(); ++k) {
    const ProofLine& line = script.lines[k];
    LineChecker checker{script, registry, k, rule_name(line.why)};
    if (line.formula.has_metavariables()) checker.fail("proof lines must not contain metavariables");
    std::visit(checker, line.why);
  }
  return script.lines.back().formula;
}

void TheoremRegistry::add(const std::string& name, const ProofScript& script,
                          const std::map<std::string, std::string>& atom_to_meta) {
  if (entries_.count(name)) throw std::invalid_argument("theorem already registered: " + name);
  if (script.mode != ProofScript::Mode::Theorem) {
    throw std::invalid_argument("only theorem-mode scripts can be registered");
  }
  const Formula conclusion = check(script, *this);
  entries_.emplace(name, generalize(conclusion, atom_to_meta));
}

const Schema* TheoremRegistry::find(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

std::size_t ScriptBuilder::add(Formula f, Justification why) {
  script_.lines.push_back(ProofLine{std::move(f), std::move(why)});
  return script_.lines.size() - 1;
}

std::size_t ScriptBuilder::hyp(std::size_t index) {
  return add(script_.hypotheses.at(index), just::Hyp{index});
}

std::size_t ScriptBuilder::mp(std::size_t minor, std::size_t major) {
  const Formula& imp = formula(major);
  if (imp.kind() != Kind::Implies) throw std::logic_error("mp: major premise is not an implication");
  return add(imp.rhs(), just::MP{minor, major});
}

std::size_t ScriptBuilder::nec(std::size_t line) {
  return add(Formula::know(formula(line)), just::Nec{line});
}

std::size_t ScriptBuilder::mono_d(std::size_t line) {
  const Formula& f = formula(line);
  return add(Formula::implies(Formula::de_dicto(f.lhs()), Formula::de_dicto(f.rhs())),
             just::MonoD{line});
}

std::size_t ScriptBuilder::mono_r(std::size_t line) {
  const Formula& f = formula(line);
  return add(Formula::implies(Formula::de_re(f.lhs()), Formula::de_re(f.rhs())),
             just::MonoR{line});
}

std::size_t ScriptBuilder::cite(const std::string& name, const Schema& schema, Substitution sigma) {
  Formula f = instantiate(schema, sigma);
  return add(std::move(f), just::Cite{name, std::move(sigma)});
}

std::size_t ScriptBuilder::chain(std::size_t xy, std::size_t yz) {
  const Formula x = formula(xy).lhs();
  const Formula y = formula(xy).rhs();
  const Formula z = formula(yz).rhs();
  using F = Formula;
  // (y -> z) -> ((x -> y) -> (x -> z))
  std::size_t t = taut(F::implies(formula(yz), F::implies(formula(xy), F::implies(x, z))));
  std::size_t s = mp(yz, t);
  return mp(xy, s);
}

}  // namespace awarekit
