#include "awarekit/explain.hpp"

#include <sstream>

#include "awarekit/checker.hpp"
#include "awarekit/parser.hpp"

namespace awarekit {

namespace {

class Explainer {
 public:
  Explainer(const ModelFile& file, std::size_t max_depth)
      : file_(file), ev_(file.model), max_depth_(max_depth) {}

  std::string run(Point pt, const Formula& f) {
    node(pt, f, 0);
    return os_.str();
  }

 private:
  bool holds(Point pt, const Formula& f) { return ev_.satisfies(pt, CompiledFormula(f)); }

  std::string at(Point pt) const {
    return file_.world_names[pt.world] + "," + file_.agent_names[pt.agent];
  }
  const std::string& world(std::size_t w) const { return file_.world_names[w]; }
  const std::string& agent(std::size_t a) const { return file_.agent_names[a]; }

  std::string worlds(const std::vector<std::size_t>& ws) const {
    std::string s = "{";
    for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? "," : "") + world(ws[i]);
    return s + "}";
  }

  void line(std::size_t depth, const std::string& text) {
    os_ << std::string(2 * depth, ' ') << text << "\n";
  }

  void node(Point pt, const Formula& f, std::size_t depth) {
    const bool v = holds(pt, f);
    line(depth, at(pt) + (v ? " |= " : " |/= ") + render(f));
    if (depth >= max_depth_) return;
    const auto& idx = ev_.index();
    const std::size_t d = depth + 1;
    switch (f.kind()) {
      case Kind::Atom:
        line(d, "(" + agent(pt.agent) + "," + world(pt.world) + ")" +
                    (v ? " is in " : " is not in ") + "the valuation of " + f.name());
        return;
      case Kind::Falsum:
      case Kind::Meta: return;
      case Kind::Not: node(pt, f.child(), d); return;
      case Kind::And:
      case Kind::Or: {
        // Descend into the operands that decide the value.
        const bool decisive = f.kind() == Kind::Or;
        bool l = holds(pt, f.lhs());
        if (v == decisive) {
          node(pt, l == decisive ? f.lhs() : f.rhs(), d);
        } else {
          node(pt, f.lhs(), d);
          node(pt, f.rhs(), d);
        }
        return;
      }
      case Kind::Implies:
        if (!v) {
          node(pt, f.lhs(), d);
          node(pt, f.rhs(), d);
        } else {
          node(pt, holds(pt, f.lhs()) ? f.rhs() : f.lhs(), d);
        }
        return;
      case Kind::Know: {
        const auto& block = idx.block(pt.agent, pt.world);
        if (v) {
          line(d, "holds of " + agent(pt.agent) + " at every world in " + worlds(block));
          return;
        }
        for (std::size_t u : block) {
          if (!holds({u, pt.agent}, f.child())) {
            line(d, "fails at indistinguishable world " + world(u));
            node({u, pt.agent}, f.child(), d + 1);
            return;
          }
        }
        return;
      }
      case Kind::DeRe: {
        const auto& block = idx.block(pt.agent, pt.world);
        if (v) {
          for (std::size_t b : idx.agents_at(pt.world)) {
            if (holds({pt.world, b}, f.child()) && idx.aware_of(pt.agent, pt.world, b)) {
              line(d, "witness agent " + agent(b) + ", present in every world of " +
                          worlds(block));
              node({pt.world, b}, f.child(), d + 1);
              return;
            }
          }
          return;
        }
        for (std::size_t b : idx.agents_at(pt.world)) {
          if (!holds({pt.world, b}, f.child())) {
            line(d, "agent " + agent(b) + " lacks the property at " + world(pt.world));
            continue;
          }
          for (std::size_t u : block) {
            if (!idx.present(b, u)) {
              line(d, "agent " + agent(b) + " has the property but is absent from " +
                          "indistinguishable world " + world(u));
              break;
            }
          }
        }
        return;
      }
      case Kind::DeDicto: {
        const auto& block = idx.block(pt.agent, pt.world);
        for (std::size_t u : block) {
          std::optional<std::size_t> witness;
          for (std::size_t b : idx.agents_at(u)) {
            if (holds({u, b}, f.child())) {
              witness = b;
              break;
            }
          }
          if (witness) {
            if (v) {
              line(d, "world " + world(u) + ": witness agent " + agent(*witness));
              node({u, *witness}, f.child(), d + 1);
            }
          } else {
            line(d, "world " + world(u) + ": no present agent has the property");
            if (!v) return;
          }
        }
        return;
      }
    }
  }

  const ModelFile& file_;
  Evaluator ev_;
  std::size_t max_depth_;
  std::ostringstream os_;
};

}  // namespace

std::string explain(const ModelFile& file, Point pt, const Formula& f, std::size_t max_depth) {
  return Explainer(file, max_depth).run(pt, f);
}

}  // namespace awarekit
