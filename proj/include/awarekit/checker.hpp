// The satisfaction relation w, a |= f over epistemic models.
//
//   K f  f holds of the same agent at every world of the agent's block.
//   R f  some agent b present here has f, and b is present throughout the
//        evaluating agent's block (b may be the evaluating agent).
//   D f  every world of the evaluating agent's block has some present agent
//        with f.
//
// Satisfaction is only defined at present points; asking about an absent
// agent throws AgentNotPresent.

#ifndef AWAREKIT_CHECKER_HPP_
#define AWAREKIT_CHECKER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "awarekit/formula.hpp"
#include "awarekit/model.hpp"

namespace awarekit {

// A formula flattened into a DAG of its distinct subformulas, children first.
class CompiledFormula {
 public:
  struct Node {
    Kind kind;
    int a = -1;
    int b = -1;
    std::string atom;
  };

  // Throws std::invalid_argument on metavariables.
  explicit CompiledFormula(const Formula& f);

  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return root_; }
  const Formula& source() const { return source_; }

 private:
  Formula source_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

// Lookup tables over one model. The model must outlive the index.
// Throws std::invalid_argument if indist does not partition presence.
class ModelIndex {
 public:
  explicit ModelIndex(const EpistemicModel& m);

  const EpistemicModel& model() const { return *m_; }
  std::size_t worlds() const { return W_; }
  std::size_t agents() const { return A_; }

  bool present(std::size_t agent, std::size_t world) const {
    return present_[agent * W_ + world] != 0;
  }
  // Worlds of the agent's indistinguishability block around `world`.
  const std::vector<std::size_t>& block(std::size_t agent, std::size_t world) const {
    return blocks_[block_of_[agent * W_ + world]];
  }
  const std::vector<std::size_t>& agents_at(std::size_t world) const { return agents_at_[world]; }
  // b is present in every world of agent's block around `world`.
  bool aware_of(std::size_t agent, std::size_t world, std::size_t b) const;
  const PairSet* truth(const std::string& prop) const;

 private:
  const EpistemicModel* m_;
  std::size_t W_;
  std::size_t A_;
  std::vector<std::uint8_t> present_;
  std::vector<int> block_of_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::vector<std::size_t>> agents_at_;
};

class Evaluator {
 public:
  explicit Evaluator(const EpistemicModel& m) : index_(m) {}

  const ModelIndex& index() const { return index_; }

  // Top-down recursion memoised on (world, agent, subformula) for this call.
  bool satisfies(Point pt, const CompiledFormula& f) const;

  // Truth of the root at every cell (agent * worlds + world), computed
  // bottom-up over the DAG. Cells of absent agents are 0.
  std::vector<std::uint8_t> label(const CompiledFormula& f) const;

  // First present point (in scan order) where f fails.
  std::optional<Point> first_failure(const CompiledFormula& f) const;

 private:
  ModelIndex index_;
};

bool satisfies(const EpistemicModel& m, Point pt, const Formula& f);
bool valid_in_model(const EpistemicModel& m, const Formula& f);
std::set<Point> extension(const EpistemicModel& m, const Formula& f);

}  // namespace awarekit

#endif  // AWAREKIT_CHECKER_HPP_
