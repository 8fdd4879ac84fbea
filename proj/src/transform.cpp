#include "awarekit/transform.hpp"

#include <stdexcept>

namespace awarekit {

namespace {

using F = Formula;

void require_hypothesis_mode(const ProofScript& s) {
  if (s.mode != ProofScript::Mode::FromHypotheses) {
    throw std::invalid_argument("expected a hypothesis-mode script");
  }
}

}  // namespace

ProofScript deduction(const ProofScript& script, std::size_t discharged,
                      const TheoremRegistry& registry) {
  require_hypothesis_mode(script);
  if (discharged >= script.hypotheses.size()) {
    throw std::invalid_argument("discharged hypothesis index out of range");
  }
  check(script, registry);

  const F phi = script.hypotheses[discharged];
  std::vector<F> kept;
  for (std::size_t i = 0; i < script.hypotheses.size(); ++i) {
    if (i != discharged) kept.push_back(script.hypotheses[i]);
  }
  ScriptBuilder b(ProofScript::from(std::move(kept)));
  std::vector<std::size_t> moved(script.lines.size());  // line k -> line proving phi -> psi_k

  // Premise psi_k available without phi: emit it, then phi -> psi_k.
  auto weaken = [&](std::size_t premise) {
    const F psi = b.formula(premise);
    auto t = b.taut(F::implies(psi, F::implies(phi, psi)));
    return b.mp(premise, t);
  };

  for (std::size_t k = 0; k < script.lines.size(); ++k) {
    const ProofLine& line = script.lines[k];
    const F& psi = line.formula;
    if (const auto* h = std::get_if<just::Hyp>(&line.why)) {
      if (h->index == discharged) {
        moved[k] = b.taut(F::implies(phi, phi));
      } else {
        moved[k] = weaken(b.hyp(h->index < discharged ? h->index : h->index - 1));
      }
    } else if (const auto* mp = std::get_if<just::MP>(&line.why)) {
      const F& psi_i = script.lines[mp->minor].formula;
      // (phi -> psi_i) -> ((phi -> (psi_i -> psi)) -> (phi -> psi))
      auto t = b.taut(F::implies(F::implies(phi, psi_i),
                                 F::implies(F::implies(phi, F::implies(psi_i, psi)),
                                            F::implies(phi, psi))));
      auto s = b.mp(moved[mp->minor], t);
      moved[k] = b.mp(moved[mp->major], s);
    } else {
      // Axiom or citation: a theorem on its own.
      moved[k] = weaken(b.add(psi, line.why));
    }
  }
  return std::move(b).take();
}

ProofScript lift_knowledge(const ProofScript& script, TheoremRegistry& registry) {
  require_hypothesis_mode(script);
  const F psi = check(script, registry);
  const std::size_t n = script.hypotheses.size();

  // Discharge from the last hypothesis down to a closed proof of
  // phi_1 -> (phi_2 -> ... -> (phi_n -> psi)).
  ProofScript closed = script;
  while (!closed.hypotheses.empty()) {
    closed = deduction(closed, closed.hypotheses.size() - 1, registry);
  }

  ProofScript necessitated = ProofScript::theorem("");
  necessitated.lines = closed.lines;
  ScriptBuilder nb(std::move(necessitated));
  nb.nec(nb.size() - 1);
  std::size_t serial = registry.entries().size();
  std::string name;
  do {
    name = "lifted_" + std::to_string(serial++);
  } while (registry.contains(name));
  ProofScript aux = std::move(nb).take();
  aux.name = name;
  registry.add(name, aux);

  std::vector<F> lifted;
  for (const F& h : script.hypotheses) lifted.push_back(F::know(h));
  ScriptBuilder b(ProofScript::from(std::move(lifted)));
  auto cur = b.cite(name, *registry.find(name), {});
  for (std::size_t i = 0; i < n; ++i) {
    // cur: K(phi_i -> rest)
    const F inner = b.formula(cur).child();
    auto dist = b.axiom(F::implies(b.formula(cur), F::implies(F::know(inner.lhs()),
                                                              F::know(inner.rhs()))),
                        AxiomId::Dist);
    auto step = b.mp(cur, dist);
    cur = b.mp(b.hyp(i), step);
  }
  if (!(b.formula(cur) == F::know(psi))) throw std::logic_error("lift_knowledge: wrong conclusion");
  return std::move(b).take();
}

ProofScript as_hypothesis_proof(const std::string& theorem, const Substitution& sigma,
                                const TheoremRegistry& registry) {
  const Schema* s = registry.find(theorem);
  if (s == nullptr) throw std::invalid_argument("unknown theorem " + theorem);
  ScriptBuilder b(ProofScript::from({}));
  b.cite(theorem, *s, sigma);
  return std::move(b).take();
}

}  // namespace awarekit
