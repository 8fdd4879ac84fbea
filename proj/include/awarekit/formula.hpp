// Formula trees of the K/R/D awareness language.
//
// A Formula is an immutable, reference-counted tree. Copies are cheap and
// share structure. Equality and ordering are structural.

#ifndef AWAREKIT_FORMULA_HPP_
#define AWAREKIT_FORMULA_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace awarekit {

enum class Kind : std::uint8_t {
  Atom,
  Meta,  // schema metavariable; never produced by the formula parser
  Falsum,
  Not,
  Implies,
  And,
  Or,
  Know,
  DeRe,
  DeDicto,
};

const char* kind_name(Kind k);

inline bool is_modal(Kind k) {
  return k == Kind::Know || k == Kind::DeRe || k == Kind::DeDicto;
}
inline bool is_unary(Kind k) { return k == Kind::Not || is_modal(k); }
inline bool is_binary(Kind k) {
  return k == Kind::Implies || k == Kind::And || k == Kind::Or;
}

class Formula {
 public:
  // Default-constructed formula is Falsum.
  Formula();

  static Formula atom(std::string name);
  static Formula meta(std::string name);
  static Formula falsum();
  static Formula truth();  // ~false
  static Formula neg(Formula f);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula know(Formula f);
  static Formula de_re(Formula f);
  static Formula de_dicto(Formula f);
  static Formula unary(Kind k, Formula f);
  static Formula binary(Kind k, Formula lhs, Formula rhs);

  Kind kind() const;
  // Identifier of an Atom or Meta node; empty otherwise.
  const std::string& name() const;
  // Operand of a unary node, or left operand of a binary node.
  const Formula& child() const;
  const Formula& lhs() const { return child(); }
  const Formula& rhs() const;

  std::size_t hash() const;
  // Number of nodes in the tree.
  std::size_t size() const;
  // Nesting depth of K/R/D operators.
  std::size_t modal_depth() const;
  // Height of the tree; leaves have depth 0.
  std::size_t depth() const;
  bool has_metavariables() const;

  bool same_node(const Formula& o) const { return node_ == o.node_; }
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Kind k, std::string name, const Formula* a,
                      const Formula* b);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Formula> kids;
  std::size_t hash;
  std::size_t size;
  std::size_t modal_depth;
  std::size_t depth;
  bool has_meta;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Aⁿf: n-fold nesting of (R x | D x) around f.
Formula awareness_tower(const Formula& f, std::size_t n);

// Every subtree of f, including f itself.
std::set<Formula> subformula_closure(const Formula& f);

// Atom names occurring in f, sorted.
std::set<std::string> atoms_of(const Formula& f);
std::set<std::string> metavariables_of(const Formula& f);

}  // namespace awarekit

template <>
struct std::hash<awarekit::Formula> {
  std::size_t operator()(const awarekit::Formula& f) const { return f.hash(); }
};

#endif  // AWAREKIT_FORMULA_HPP_
