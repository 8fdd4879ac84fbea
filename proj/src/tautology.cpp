#include "awarekit/tautology.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>

namespace awarekit {

namespace {

struct Gate {
  Kind kind;  // Atom stands for "variable"
  int a = -1;
  int b = -1;
};

class Circuit {
 public:
  explicit Circuit(const Formula& f) { root_ = add(f); }

  const std::vector<Formula>& variables() const { return vars_; }

  // Shannon expansion over a partial assignment with early cut-off.
  bool valid() {
    assignment_.assign(vars_.size(), -1);
    return expand(0);
  }

 private:
  int add(const Formula& f) {
    const Kind k = f.kind();
    if (k == Kind::Atom || k == Kind::Meta || is_modal(k)) {
      auto [it, inserted] = var_index_.emplace(f, static_cast<int>(vars_.size()));
      if (inserted) vars_.push_back(f);
      gates_.push_back(Gate{Kind::Atom, it->second});
    } else if (k == Kind::Falsum) {
      gates_.push_back(Gate{k});
    } else if (k == Kind::Not) {
      int c = add(f.child());
      gates_.push_back(Gate{k, c});
    } else {
      int l = add(f.lhs());
      int r = add(f.rhs());
      gates_.push_back(Gate{k, l, r});
    }
    return static_cast<int>(gates_.size()) - 1;
  }

  // Kleene three-valued evaluation: 0 false, 1 true, -1 undetermined.
  int eval(int g) const {
    const Gate& gate = gates_[g];
    switch (gate.kind) {
      case Kind::Atom: return assignment_[gate.a];
      case Kind::Falsum: return 0;
      case Kind::Not: {
        int v = eval(gate.a);
        return v < 0 ? -1 : 1 - v;
      }
      case Kind::And: {
        int l = eval(gate.a);
        if (l == 0) return 0;
        int r = eval(gate.b);
        if (r == 0) return 0;
        return (l == 1 && r == 1) ? 1 : -1;
      }
      case Kind::Or: {
        int l = eval(gate.a);
        if (l == 1) return 1;
        int r = eval(gate.b);
        if (r == 1) return 1;
        return (l == 0 && r == 0) ? 0 : -1;
      }
      case Kind::Implies: {
        int l = eval(gate.a);
        if (l == 0) return 1;
        int r = eval(gate.b);
        if (r == 1) return 1;
        return (l == 1 && r == 0) ? 0 : -1;
      }
      default: return -1;
    }
  }

  bool expand(std::size_t next) {
    int v = eval(root_);
    if (v >= 0) return v == 1;
    while (next < assignment_.size() && assignment_[next] >= 0) ++next;
    for (std::int8_t value : {std::int8_t{0}, std::int8_t{1}}) {
      assignment_[next] = value;
      bool ok = expand(next + 1);
      assignment_[next] = -1;
      if (!ok) return false;
    }
    return true;
  }

  std::vector<Gate> gates_;
  std::vector<Formula> vars_;
  std::unordered_map<Formula, int, FormulaHash> var_index_;
  std::vector<std::int8_t> assignment_;
  int root_ = -1;
};

}  // namespace

TooManyVariables::TooManyVariables(std::size_t count)
    : std::runtime_error("tautology check needs " + std::to_string(count) +
                         " abstraction variables, limit is " +
                         std::to_string(kMaxAbstractionVariables)),
      count_(count) {}

std::vector<Formula> abstraction_variables(const Formula& f) {
  return Circuit(f).variables();
}

bool is_tautology(const Formula& f) {
  Circuit c(f);
  if (c.variables().size() > kMaxAbstractionVariables) {
    throw TooManyVariables(c.variables().size());
  }
  return c.valid();
}

}  // namespace awarekit
