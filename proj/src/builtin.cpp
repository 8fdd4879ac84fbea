#include "awarekit/builtin.hpp"

#include <stdexcept>

namespace awarekit {

namespace {

using F = Formula;

ProofScript positive_introspection() {
  const F p = F::atom(kBuiltinAtom);
  const F kp = F::know(p);
  const F not_kp = F::neg(kp);
  const F k_not_kp = F::know(not_kp);
  const F m = F::neg(k_not_kp);  // ~K~Kp
  const F km = F::know(m);

  ScriptBuilder b(ProofScript::theorem("positive_introspection"));
  // Kp -> ~K~Kp, by contraposing the truth axiom at ~Kp.
  auto t1 = b.axiom(F::implies(k_not_kp, not_kp), AxiomId::Truth);
  auto c1 = b.taut(F::implies(b.formula(t1), F::implies(kp, m)));
  auto kp_m = b.mp(t1, c1);
  // ~K~Kp -> K~K~Kp, negative introspection at ~Kp.
  auto n1 = b.axiom(F::implies(m, km), AxiomId::NegIntro);
  auto kp_km = b.chain(kp_m, n1);
  // ~K~Kp -> Kp, by contraposing negative introspection at p.
  auto n2 = b.axiom(F::implies(not_kp, k_not_kp), AxiomId::NegIntro);
  auto c2 = b.taut(F::implies(b.formula(n2), F::implies(m, kp)));
  auto m_kp = b.mp(n2, c2);
  auto nec = b.nec(m_kp);
  auto dist = b.axiom(F::implies(b.formula(nec), F::implies(km, F::know(kp))), AxiomId::Dist);
  auto km_kkp = b.mp(nec, dist);
  b.chain(kp_km, km_kkp);
  return std::move(b).take();
}

ProofScript lemma_a(std::size_t n) {
  const F p = F::atom(kBuiltinAtom);
  const F dp = F::de_dicto(p);
  ScriptBuilder b(ProofScript::theorem("lemma_A_" + std::to_string(n)));
  // D A^0 p -> D p
  auto cur = b.taut(F::implies(dp, dp));
  for (std::size_t k = 0; k < n; ++k) {
    const F inner = awareness_tower(p, k);
    // D(R A^k p | D A^k p) -> D A^k p
    auto ga = b.axiom(F::implies(F::de_dicto(awareness_tower(inner, 1)), F::de_dicto(inner)),
                      AxiomId::GenAware);
    cur = b.chain(ga, cur);
  }
  return std::move(b).take();
}

ProofScript unaware_top(std::size_t n) {
  const F bottom = F::falsum();
  const F neg_top = F::neg(F::truth());
  ScriptBuilder b(ProofScript::theorem("unaware_top_" + std::to_string(n)));
  // ~A^0 ~true
  auto cur = b.taut(F::neg(neg_top));
  for (std::size_t k = 0; k < n; ++k) {
    const F x = awareness_tower(neg_top, k);
    const F rx = F::de_re(x);
    const F dx = F::de_dicto(x);
    // x -> false
    auto c = b.taut(F::implies(b.formula(cur), F::implies(x, bottom)));
    auto x_false = b.mp(cur, c);
    // ~R x
    auto mono_r = b.mono_r(x_false);
    auto ur = b.axiom(F::neg(F::de_re(bottom)), AxiomId::UnawareFalseR);
    auto cr = b.taut(F::implies(b.formula(mono_r), F::implies(b.formula(ur), F::neg(rx))));
    auto not_rx = b.mp(ur, b.mp(mono_r, cr));
    // ~D x
    auto mono_d = b.mono_d(x_false);
    auto ud = b.axiom(F::neg(F::de_dicto(bottom)), AxiomId::UnawareFalseD);
    auto cd = b.taut(F::implies(b.formula(mono_d), F::implies(b.formula(ud), F::neg(dx))));
    auto not_dx = b.mp(ud, b.mp(mono_d, cd));
    // ~(R x | D x)
    auto join = b.taut(
        F::implies(F::neg(rx), F::implies(F::neg(dx), F::neg(F::disj(rx, dx)))));
    cur = b.mp(not_dx, b.mp(not_rx, join));
  }
  return std::move(b).take();
}

ProofScript mono_a(std::size_t m, std::size_t n) {
  const F psi = awareness_tower(F::atom(kBuiltinAtom), m);
  ScriptBuilder b(ProofScript::theorem("mono_A_" + std::to_string(m) + "_" + std::to_string(n)));
  // psi -> A^0 psi
  auto cur = b.taut(F::implies(psi, psi));
  for (std::size_t k = m; k < n; ++k) {
    const F y = awareness_tower(psi, k - m);
    auto self = b.axiom(F::implies(y, F::de_re(y)), AxiomId::SelfAwareR);
    auto to_r = b.chain(cur, self);
    auto widen = b.taut(F::implies(b.formula(to_r), F::implies(psi, awareness_tower(y, 1))));
    cur = b.mp(to_r, widen);
  }
  return std::move(b).take();
}

void expect_params(const std::string& name, const std::vector<std::size_t>& params,
                   std::size_t count) {
  if (params.size() != count) {
    throw std::invalid_argument(name + " takes " + std::to_string(count) + " parameter(s)");
  }
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"positive_introspection", "lemma_A", "unaware_top", "mono_A"};
}

ProofScript builtin(const std::string& name, const std::vector<std::size_t>& params) {
  if (name == "positive_introspection") {
    expect_params(name, params, 0);
    return positive_introspection();
  }
  if (name == "lemma_A") {
    expect_params(name, params, 1);
    return lemma_a(params[0]);
  }
  if (name == "unaware_top") {
    expect_params(name, params, 1);
    return unaware_top(params[0]);
  }
  if (name == "mono_A") {
    expect_params(name, params, 2);
    if (params[1] < params[0]) throw std::invalid_argument("mono_A(m, n) needs n >= m");
    return mono_a(params[0], params[1]);
  }
  throw std::invalid_argument("unknown builtin " + name);
}

std::string builtin_theorem_name(const std::string& name, const std::vector<std::size_t>& params) {
  std::string out = name;
  for (std::size_t v : params) out += "_" + std::to_string(v);
  return out;
}

TheoremRegistry default_registry(std::size_t max_n) {
  TheoremRegistry reg;
  const std::map<std::string, std::string> gen{{kBuiltinAtom, kBuiltinMeta}};
  reg.add("positive_introspection", builtin("positive_introspection"), gen);
  for (std::size_t n = 0; n <= max_n; ++n) {
    reg.add(builtin_theorem_name("lemma_A", {n}), builtin("lemma_A", {n}), gen);
    reg.add(builtin_theorem_name("unaware_top", {n}), builtin("unaware_top", {n}), gen);
    for (std::size_t m = 0; m <= n; ++m) {
      reg.add(builtin_theorem_name("mono_A", {m, n}), builtin("mono_A", {m, n}), gen);
    }
  }
  return reg;
}

}  // namespace awarekit
