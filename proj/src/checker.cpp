#include "awarekit/checker.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace awarekit {

CompiledFormula::CompiledFormula(const Formula& f) : source_(f) {
  std::unordered_map<Formula, int, FormulaHash> seen;
  // Iterative post-order so deep towers do not exhaust the stack.
  struct Frame {
    Formula f;
    bool expanded;
  };
  std::vector<Frame> stack{{f, false}};
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    if (seen.count(fr.f)) continue;
    const Kind k = fr.f.kind();
    if (k == Kind::Meta) {
      throw std::invalid_argument("cannot evaluate metavariable " + fr.f.name());
    }
    if (!fr.expanded && (is_unary(k) || is_binary(k))) {
      stack.push_back({fr.f, true});
      if (is_binary(k)) stack.push_back({fr.f.rhs(), false});
      stack.push_back({fr.f.child(), false});
      continue;
    }
    Node n{k, -1, -1, {}};
    if (k == Kind::Atom) n.atom = fr.f.name();
    if (is_unary(k) || is_binary(k)) n.a = seen.at(fr.f.child());
    if (is_binary(k)) n.b = seen.at(fr.f.rhs());
    nodes_.push_back(std::move(n));
    seen.emplace(fr.f, static_cast<int>(nodes_.size()) - 1);
  }
  root_ = seen.at(f);
}

ModelIndex::ModelIndex(const EpistemicModel& m)
    : m_(&m), W_(m.world_count), A_(m.agent_count) {
  if (m.presence.agent_count() != A_ || m.presence.world_count() != W_ ||
      m.indist.size() != A_) {
    throw std::invalid_argument("model dimensions are inconsistent");
  }
  present_.assign(A_ * W_, 0);
  block_of_.assign(A_ * W_, -1);
  agents_at_.assign(W_, {});
  for (std::size_t w = 0; w < W_; ++w) {
    for (std::size_t a = 0; a < A_; ++a) {
      if (m.presence.contains(a, w)) {
        present_[a * W_ + w] = 1;
        agents_at_[w].push_back(a);
      }
    }
  }
  for (std::size_t a = 0; a < A_; ++a) {
    for (const auto& block : m.indist[a]) {
      const int id = static_cast<int>(blocks_.size());
      for (std::size_t w : block) {
        if (w >= W_ || !present_[a * W_ + w] || block_of_[a * W_ + w] >= 0) {
          throw std::invalid_argument("indistinguishability blocks do not partition presence");
        }
        block_of_[a * W_ + w] = id;
      }
      blocks_.push_back(block);
    }
  }
  for (std::size_t i = 0; i < A_ * W_; ++i) {
    if (present_[i] && block_of_[i] < 0) {
      throw std::invalid_argument("indistinguishability blocks do not partition presence");
    }
  }
}

bool ModelIndex::aware_of(std::size_t agent, std::size_t world, std::size_t b) const {
  for (std::size_t u : block(agent, world)) {
    if (!present(b, u)) return false;
  }
  return true;
}

const PairSet* ModelIndex::truth(const std::string& prop) const {
  auto it = m_->valuation.find(prop);
  return it == m_->valuation.end() ? nullptr : &it->second;
}

namespace {

class Memo {
 public:
  Memo(const ModelIndex& idx, const CompiledFormula& f)
      : idx_(idx), f_(f), cache_(f.nodes().size() * idx.worlds() * idx.agents(), -1) {}

  bool eval(int node, std::size_t w, std::size_t a) {
    std::int8_t& slot = cache_[(node * idx_.worlds() + w) * idx_.agents() + a];
    if (slot < 0) slot = compute(node, w, a) ? 1 : 0;
    return slot == 1;
  }

 private:
  bool compute(int node, std::size_t w, std::size_t a) {
    const auto& n = f_.nodes()[node];
    switch (n.kind) {
      case Kind::Atom: {
        const PairSet* t = idx_.truth(n.atom);
        return t != nullptr && t->contains(a, w);
      }
      case Kind::Falsum: return false;
      case Kind::Not: return !eval(n.a, w, a);
      case Kind::Implies: return !eval(n.a, w, a) || eval(n.b, w, a);
      case Kind::And: return eval(n.a, w, a) && eval(n.b, w, a);
      case Kind::Or: return eval(n.a, w, a) || eval(n.b, w, a);
      case Kind::Know:
        return std::all_of(idx_.block(a, w).begin(), idx_.block(a, w).end(),
                           [&](std::size_t u) { return eval(n.a, u, a); });
      case Kind::DeRe:
        for (std::size_t b : idx_.agents_at(w)) {
          if (eval(n.a, w, b) && idx_.aware_of(a, w, b)) return true;
        }
        return false;
      case Kind::DeDicto:
        for (std::size_t u : idx_.block(a, w)) {
          const auto& here = idx_.agents_at(u);
          if (std::none_of(here.begin(), here.end(),
                           [&](std::size_t b) { return eval(n.a, u, b); })) {
            return false;
          }
        }
        return true;
      case Kind::Meta: break;
    }
    throw std::logic_error("unevaluable node");
  }

  const ModelIndex& idx_;
  const CompiledFormula& f_;
  std::vector<std::int8_t> cache_;
};

}  // namespace

bool Evaluator::satisfies(Point pt, const CompiledFormula& f) const {
  if (pt.world >= index_.worlds() || pt.agent >= index_.agents() ||
      !index_.present(pt.agent, pt.world)) {
    throw AgentNotPresent(pt.agent, pt.world);
  }
  Memo memo(index_, f);
  return memo.eval(f.root(), pt.world, pt.agent);
}

std::vector<std::uint8_t> Evaluator::label(const CompiledFormula& f) const {
  const std::size_t W = index_.worlds();
  const std::size_t A = index_.agents();
  const auto& nodes = f.nodes();
  std::vector<std::vector<std::uint8_t>> val(nodes.size());
  std::vector<std::uint8_t> some(W);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    auto& out = val[i];
    out.assign(A * W, 0);
    const auto* x = n.a >= 0 ? &val[n.a] : nullptr;
    const auto* y = n.b >= 0 ? &val[n.b] : nullptr;
    if (n.kind == Kind::DeDicto) {
      for (std::size_t u = 0; u < W; ++u) {
        some[u] = 0;
        for (std::size_t b : index_.agents_at(u)) some[u] |= (*x)[b * W + u];
      }
    }
    for (std::size_t a = 0; a < A; ++a) {
      for (std::size_t w = 0; w < W; ++w) {
        if (!index_.present(a, w)) continue;
        const std::size_t c = a * W + w;
        bool v = false;
        switch (n.kind) {
          case Kind::Atom: {
            const PairSet* t = index_.truth(n.atom);
            v = t != nullptr && t->contains(a, w);
            break;
          }
          case Kind::Falsum: v = false; break;
          case Kind::Not: v = !(*x)[c]; break;
          case Kind::Implies: v = !(*x)[c] || (*y)[c]; break;
          case Kind::And: v = (*x)[c] && (*y)[c]; break;
          case Kind::Or: v = (*x)[c] || (*y)[c]; break;
          case Kind::Know: {
            v = true;
            for (std::size_t u : index_.block(a, w)) v = v && (*x)[a * W + u];
            break;
          }
          case Kind::DeRe:
            for (std::size_t b : index_.agents_at(w)) {
              if ((*x)[b * W + w] && index_.aware_of(a, w, b)) {
                v = true;
                break;
              }
            }
            break;
          case Kind::DeDicto: {
            v = true;
            for (std::size_t u : index_.block(a, w)) v = v && some[u];
            break;
          }
          case Kind::Meta: throw std::logic_error("unevaluable node");
        }
        out[c] = v ? 1 : 0;
      }
    }
  }
  return std::move(val[f.root()]);
}

std::optional<Point> Evaluator::first_failure(const CompiledFormula& f) const {
  const auto truth = label(f);
  const std::size_t W = index_.worlds();
  for (std::size_t w = 0; w < W; ++w) {
    for (std::size_t a : index_.agents_at(w)) {
      if (!truth[a * W + w]) return Point{w, a};
    }
  }
  return std::nullopt;
}

bool satisfies(const EpistemicModel& m, Point pt, const Formula& f) {
  return Evaluator(m).satisfies(pt, CompiledFormula(f));
}

bool valid_in_model(const EpistemicModel& m, const Formula& f) {
  return !Evaluator(m).first_failure(CompiledFormula(f)).has_value();
}

std::set<Point> extension(const EpistemicModel& m, const Formula& f) {
  Evaluator ev(m);
  const auto truth = ev.label(CompiledFormula(f));
  std::set<Point> out;
  for (const Point& pt : points(m)) {
    if (truth[pt.agent * m.world_count + pt.world]) out.insert(pt);
  }
  return out;
}

}  // namespace awarekit
