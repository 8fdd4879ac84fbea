// Model files (JSON) and Graphviz export.
//
//   {"worlds": [names], "agents": [names],
//    "presence": [[agent, world], ...],
//    "indist": {agent: [[world, ...], ...]},
//    "valuation": {prop: [[agent, world], ...]}}
//
// Names map to indices by list position.

#ifndef AWAREKIT_MODEL_IO_HPP_
#define AWAREKIT_MODEL_IO_HPP_

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "awarekit/model.hpp"

namespace awarekit {

struct ModelFile {
  EpistemicModel model;
  std::vector<std::string> world_names;
  std::vector<std::string> agent_names;

  // Default names w0, w1, ... and a0, a1, ...
  static ModelFile named(EpistemicModel m);

  std::size_t world_index(std::string_view name) const;  // throws ModelFileError
  std::size_t agent_index(std::string_view name) const;
};

// Malformed JSON, unknown names, duplicate names, wrong shapes.
class ModelFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses without validating Def-level invariants; run validate() afterwards.
ModelFile parse_model_json(std::string_view text);
ModelFile load_model_file(const std::string& path);

std::string to_json(const ModelFile& f, int indent = 2);

// Worlds as clusters, present agents as nodes, indistinguishability blocks as
// labelled edges. Points in `highlight` are filled.
std::string to_dot(const ModelFile& f, const std::set<Point>& highlight = {});

}  // namespace awarekit

#endif  // AWAREKIT_MODEL_IO_HPP_
