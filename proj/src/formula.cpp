#include "awarekit/formula.hpp"

#include <algorithm>
#include <utility>

namespace awarekit {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Atom: return "atom";
    case Kind::Meta: return "metavariable";
    case Kind::Falsum: return "false";
    case Kind::Not: return "not";
    case Kind::Implies: return "implies";
    case Kind::And: return "and";
    case Kind::Or: return "or";
    case Kind::Know: return "K";
    case Kind::DeRe: return "R";
    case Kind::DeDicto: return "D";
  }
  return "?";
}

Formula Formula::make(Kind k, std::string name, const Formula* a,
                      const Formula* b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->name = std::move(name);
  std::size_t h = mix(0, static_cast<std::size_t>(k));
  h = mix(h, std::hash<std::string>{}(n->name));
  n->size = 1;
  n->modal_depth = 0;
  n->depth = 0;
  n->has_meta = k == Kind::Meta;
  for (const Formula* kid : {a, b}) {
    if (kid == nullptr) continue;
    n->kids.push_back(*kid);
    h = mix(h, kid->hash());
    n->size += kid->size();
    n->modal_depth = std::max(n->modal_depth, kid->modal_depth());
    n->depth = std::max(n->depth, kid->depth() + 1);
    n->has_meta = n->has_meta || kid->has_metavariables();
  }
  if (is_modal(k)) ++n->modal_depth;
  n->hash = h;
  return Formula(std::move(n));
}

Formula::Formula() {
  static const Formula bottom = make(Kind::Falsum, {}, nullptr, nullptr);
  node_ = bottom.node_;
}

Formula Formula::atom(std::string name) {
  return make(Kind::Atom, std::move(name), nullptr, nullptr);
}
Formula Formula::meta(std::string name) {
  return make(Kind::Meta, std::move(name), nullptr, nullptr);
}
Formula Formula::falsum() { return Formula(); }
Formula Formula::truth() { return neg(falsum()); }
Formula Formula::neg(Formula f) { return make(Kind::Not, {}, &f, nullptr); }
Formula Formula::implies(Formula lhs, Formula rhs) {
  return make(Kind::Implies, {}, &lhs, &rhs);
}
Formula Formula::conj(Formula lhs, Formula rhs) {
  return make(Kind::And, {}, &lhs, &rhs);
}
Formula Formula::disj(Formula lhs, Formula rhs) {
  return make(Kind::Or, {}, &lhs, &rhs);
}
Formula Formula::know(Formula f) { return make(Kind::Know, {}, &f, nullptr); }
Formula Formula::de_re(Formula f) { return make(Kind::DeRe, {}, &f, nullptr); }
Formula Formula::de_dicto(Formula f) {
  return make(Kind::DeDicto, {}, &f, nullptr);
}
Formula Formula::unary(Kind k, Formula f) {
  return make(k, {}, &f, nullptr);
}
Formula Formula::binary(Kind k, Formula lhs, Formula rhs) {
  return make(k, {}, &lhs, &rhs);
}

Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::child() const { return node_->kids.at(0); }
const Formula& Formula::rhs() const { return node_->kids.at(1); }
std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::modal_depth() const { return node_->modal_depth; }
std::size_t Formula::depth() const { return node_->depth; }
bool Formula::has_metavariables() const { return node_->has_meta; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size ||
      a.node_->kind != b.node_->kind || a.node_->name != b.node_->name) {
    return false;
  }
  return std::equal(a.node_->kids.begin(), a.node_->kids.end(),
                    b.node_->kids.begin(), b.node_->kids.end());
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->kind <=> b.node_->kind; c != 0) return c;
  if (auto c = a.node_->name.compare(b.node_->name); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const auto& ka = a.node_->kids;
  const auto& kb = b.node_->kids;
  for (std::size_t i = 0; i < ka.size() && i < kb.size(); ++i) {
    if (auto c = ka[i] <=> kb[i]; c != 0) return c;
  }
  return ka.size() <=> kb.size();
}

Formula awareness_tower(const Formula& f, std::size_t n) {
  Formula t = f;
  for (std::size_t i = 0; i < n; ++i) {
    t = Formula::disj(Formula::de_re(t), Formula::de_dicto(t));
  }
  return t;
}

namespace {

template <typename Fn>
void visit(const Formula& f, Fn&& fn) {
  fn(f);
  if (is_unary(f.kind())) {
    visit(f.child(), fn);
  } else if (is_binary(f.kind())) {
    visit(f.lhs(), fn);
    visit(f.rhs(), fn);
  }
}

}  // namespace

std::set<Formula> subformula_closure(const Formula& f) {
  std::set<Formula> out;
  visit(f, [&](const Formula& g) { out.insert(g); });
  return out;
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  visit(f, [&](const Formula& g) {
    if (g.kind() == Kind::Atom) out.insert(g.name());
  });
  return out;
}

std::set<std::string> metavariables_of(const Formula& f) {
  std::set<std::string> out;
  visit(f, [&](const Formula& g) {
    if (g.kind() == Kind::Meta) out.insert(g.name());
  });
  return out;
}

}  // namespace awarekit
