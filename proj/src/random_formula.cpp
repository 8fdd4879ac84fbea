#include "awarekit/random_formula.hpp"

#include <array>
#include <stdexcept>

#include "awarekit/generate.hpp"

namespace awarekit {

namespace {

constexpr std::array<Kind, 9> kKinds{Kind::Atom,    Kind::Falsum, Kind::Not,
                                     Kind::Implies, Kind::And,    Kind::Or,
                                     Kind::Know,    Kind::DeRe,   Kind::DeDicto};

}  // namespace

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                       std::size_t depth) {
  if (atoms.empty()) throw std::invalid_argument("random_formula needs at least one atom");
  const Kind k = kKinds[uniform_below(rng, depth == 0 ? 2 : kKinds.size())];
  switch (k) {
    case Kind::Atom:
      return Formula::atom(atoms[uniform_below(rng, atoms.size())]);
    case Kind::Falsum:
      return Formula::falsum();
    default:
      break;
  }
  if (is_unary(k)) return Formula::unary(k, random_formula(rng, atoms, depth - 1));
  Formula l = random_formula(rng, atoms, depth - 1);
  Formula r = random_formula(rng, atoms, depth - 1);
  return Formula::binary(k, std::move(l), std::move(r));
}

}  // namespace awarekit
