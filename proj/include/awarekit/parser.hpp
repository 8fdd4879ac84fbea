// Concrete syntax for formulas.
//
//   formula := impl
//   impl    := disj ("->" impl)?
//   disj    := conj ("|" conj)*
//   conj    := unary ("&" unary)*
//   unary   := ("~" | "K" | "R" | "D" | "A") unary | atom
//   atom    := ident | "true" | "false" | "(" formula ")"
//
// "A x" is read as "R x | D x" and "true" as "~false". K, R, D, A, true and
// false are reserved and cannot name atoms.

#ifndef AWAREKIT_PARSER_HPP_
#define AWAREKIT_PARSER_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "awarekit/formula.hpp"

namespace awarekit {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             std::string found);

  // 1-based byte offset of the offending token; input length + 1 at end.
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
  std::string found_;
};

enum class Metavariables {
  Reject,  // every identifier is an atom
  Greek,   // capitalised Greek letter names (Phi, Psi, Chi2, ...) are metavariables
};

Formula parse(std::string_view text,
              Metavariables metas = Metavariables::Reject);

// True for identifiers that denote metavariables in schema text.
bool is_metavariable_name(std::string_view ident);
// A name usable as an atom: letter, then letters, digits or '_', and not
// one of K, R, D, A, true, false.
bool is_identifier(std::string_view ident);

// Minimally parenthesised rendering; parse(render(f)) == f.
std::string render(const Formula& f);

}  // namespace awarekit

#endif  // AWAREKIT_PARSER_HPP_
