#include "awarekit/schema.hpp"

#include "awarekit/parser.hpp"

namespace awarekit {

namespace {

bool match_into(const Formula& pat, const Formula& f, Substitution& sigma) {
  if (pat.kind() == Kind::Meta) {
    auto [it, inserted] = sigma.emplace(pat.name(), f);
    return inserted || it->second == f;
  }
  if (pat.kind() != f.kind()) return false;
  switch (pat.kind()) {
    case Kind::Atom: return pat.name() == f.name();
    case Kind::Falsum: return true;
    default: break;
  }
  if (is_unary(pat.kind())) return match_into(pat.child(), f.child(), sigma);
  return match_into(pat.lhs(), f.lhs(), sigma) &&
         match_into(pat.rhs(), f.rhs(), sigma);
}

template <typename Leaf>
Formula rebuild(const Formula& f, Leaf&& leaf) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Meta: return leaf(f);
    case Kind::Falsum: return f;
    default: break;
  }
  if (is_unary(f.kind())) return Formula::unary(f.kind(), rebuild(f.child(), leaf));
  return Formula::binary(f.kind(), rebuild(f.lhs(), leaf), rebuild(f.rhs(), leaf));
}

}  // namespace

Schema Schema::parse(std::string_view text) {
  return Schema(awarekit::parse(text, Metavariables::Greek));
}

UnboundMetavariable::UnboundMetavariable(std::string name)
    : std::runtime_error("unbound metavariable " + name), name_(std::move(name)) {}

std::optional<Substitution> match_schema(const Schema& s, const Formula& f) {
  Substitution sigma;
  if (!match_into(s.pattern(), f, sigma)) return std::nullopt;
  return sigma;
}

Formula instantiate(const Schema& s, const Substitution& sigma) {
  if (s.closed()) return s.pattern();
  return rebuild(s.pattern(), [&](const Formula& leaf) {
    if (leaf.kind() != Kind::Meta) return leaf;
    auto it = sigma.find(leaf.name());
    if (it == sigma.end()) throw UnboundMetavariable(leaf.name());
    return it->second;
  });
}

Schema generalize(const Formula& f,
                  const std::map<std::string, std::string>& atom_to_meta) {
  return Schema(rebuild(f, [&](const Formula& leaf) {
    if (leaf.kind() == Kind::Atom) {
      if (auto it = atom_to_meta.find(leaf.name()); it != atom_to_meta.end()) {
        return Formula::meta(it->second);
      }
    }
    return leaf;
  }));
}

std::string render(const Substitution& sigma) {
  std::string out = "[";
  bool first = true;
  for (const auto& [name, f] : sigma) {
    if (!first) out += ", ";
    first = false;
    out += name + "=" + render(f);
  }
  return out + "]";
}

}  // namespace awarekit
