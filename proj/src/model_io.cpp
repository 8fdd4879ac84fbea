#include "awarekit/model_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace awarekit {

using nlohmann::json;
using nlohmann::ordered_json;

ModelFile ModelFile::named(EpistemicModel m) {
  ModelFile f;
  for (std::size_t w = 0; w < m.world_count; ++w) f.world_names.push_back("w" + std::to_string(w));
  for (std::size_t a = 0; a < m.agent_count; ++a) f.agent_names.push_back("a" + std::to_string(a));
  f.model = std::move(m);
  return f;
}

namespace {

std::size_t lookup(const std::vector<std::string>& names, std::string_view name,
                   const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw ModelFileError(std::string("unknown ") + what + " \"" + std::string(name) + "\"");
}

std::vector<std::string> name_list(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ModelFileError(std::string("missing key \"") + key + "\"");
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw ModelFileError(std::string("\"") + key + "\" must be an array");
  std::vector<std::string> out;
  std::map<std::string, int> seen;
  for (const json& v : arr) {
    if (!v.is_string()) throw ModelFileError(std::string("\"") + key + "\" entries must be strings");
    auto name = v.get<std::string>();
    if (seen[name]++) throw ModelFileError("duplicate name \"" + name + "\" in \"" + key + "\"");
    out.push_back(std::move(name));
  }
  return out;
}

PairSet pair_list(const ModelFile& f, const json& arr, const std::string& where) {
  if (!arr.is_array()) throw ModelFileError(where + " must be an array of [agent, world] pairs");
  PairSet out(f.model.agent_count, f.model.world_count);
  for (const json& pr : arr) {
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string()) {
      throw ModelFileError(where + " entries must be [agent, world] string pairs");
    }
    out.insert(f.agent_index(pr[0].get<std::string>()), f.world_index(pr[1].get<std::string>()));
  }
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::size_t ModelFile::world_index(std::string_view name) const {
  return lookup(world_names, name, "world");
}

std::size_t ModelFile::agent_index(std::string_view name) const {
  return lookup(agent_names, name, "agent");
}

ModelFile parse_model_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelFileError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ModelFileError("model file must be a JSON object");

  ModelFile f;
  f.world_names = name_list(doc, "worlds");
  f.agent_names = name_list(doc, "agents");
  f.model = EpistemicModel::with_dimensions(f.world_names.size(), f.agent_names.size());
  f.model.presence = pair_list(f, doc.value("presence", json::array()), "\"presence\"");

  const json indist = doc.value("indist", json::object());
  if (!indist.is_object()) throw ModelFileError("\"indist\" must be an object");
  for (const auto& [agent, blocks] : indist.items()) {
    const std::size_t a = f.agent_index(agent);
    if (!blocks.is_array()) throw ModelFileError("indist of " + agent + " must be a list of blocks");
    Partition p;
    for (const json& block : blocks) {
      if (!block.is_array()) throw ModelFileError("indist of " + agent + " must be a list of blocks");
      std::vector<std::size_t> ws;
      for (const json& w : block) {
        if (!w.is_string()) throw ModelFileError("indist blocks must list world names");
        ws.push_back(f.world_index(w.get<std::string>()));
      }
      p.push_back(std::move(ws));
    }
    f.model.indist[a] = std::move(p);
  }

  const json valuation = doc.value("valuation", json::object());
  if (!valuation.is_object()) throw ModelFileError("\"valuation\" must be an object");
  for (const auto& [prop, pairs] : valuation.items()) {
    f.model.valuation.emplace(prop, pair_list(f, pairs, "valuation of " + prop));
  }
  return f;
}

ModelFile load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelFileError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model_json(ss.str());
}

namespace {

// Like dump(indent), except arrays of scalars stay on one line.
void write_compact(std::string& out, const ordered_json& j, std::size_t indent, std::size_t depth) {
  const std::string pad(indent * (depth + 1), ' ');
  const std::string close(indent * depth, ' ');
  auto scalar_array = [](const ordered_json& a) {
    for (const auto& e : a) {
      if (e.is_structured()) return false;
    }
    return true;
  };
  if (j.is_array() && (j.empty() || scalar_array(j))) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else if (j.is_array()) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write_compact(out, j[i], indent, depth + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      out += pad + ordered_json(k).dump() + ": ";
      write_compact(out, v, indent, depth + 1);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string to_json(const ModelFile& f, int indent) {
  const EpistemicModel& m = f.model;
  auto pairs = [&](const PairSet& s) {
    ordered_json arr = ordered_json::array();
    for (auto [a, w] : s.pairs()) arr.push_back({f.agent_names[a], f.world_names[w]});
    return arr;
  };
  ordered_json doc;
  doc["worlds"] = f.world_names;
  doc["agents"] = f.agent_names;
  doc["presence"] = pairs(m.presence);
  ordered_json indist = ordered_json::object();
  for (std::size_t a = 0; a < m.agent_count; ++a) {
    ordered_json blocks = ordered_json::array();
    for (const auto& block : m.indist[a]) {
      ordered_json names = ordered_json::array();
      for (std::size_t w : block) names.push_back(f.world_names[w]);
      blocks.push_back(std::move(names));
    }
    indist[f.agent_names[a]] = std::move(blocks);
  }
  doc["indist"] = std::move(indist);
  ordered_json valuation = ordered_json::object();
  for (const auto& [prop, truth] : m.valuation) valuation[prop] = pairs(truth);
  doc["valuation"] = std::move(valuation);
  if (indent < 0) return doc.dump();
  std::string out;
  write_compact(out, doc, static_cast<std::size_t>(indent), 0);
  return out;
}

std::string to_dot(const ModelFile& f, const std::set<Point>& highlight) {
  const EpistemicModel& m = f.model;
  auto node = [&](std::size_t w, std::size_t a) {
    return quoted(f.world_names[w] + "/" + f.agent_names[a]);
  };
  std::ostringstream os;
  os << "graph model {\n  compound=true;\n  node [shape=ellipse];\n";
  for (std::size_t w = 0; w < m.world_count; ++w) {
    os << "  subgraph " << quoted("cluster_" + f.world_names[w]) << " {\n";
    os << "    label=" << quoted(f.world_names[w]) << ";\n";
    for (std::size_t a = 0; a < m.agent_count; ++a) {
      if (!m.presence.contains(a, w)) continue;
      std::string label = f.agent_names[a];
      std::string props;
      for (const auto& [prop, truth] : m.valuation) {
        if (truth.contains(a, w)) props += (props.empty() ? "" : ",") + prop;
      }
      if (!props.empty()) label += "\\n{" + props + "}";
      os << "    " << node(w, a) << " [label=" << quoted(label);
      if (highlight.count(Point{w, a})) os << ", style=filled, fillcolor=lightblue";
      os << "];\n";
    }
    os << "  }\n";
  }
  for (std::size_t a = 0; a < m.agent_count; ++a) {
    for (const auto& block : m.indist[a]) {
      for (std::size_t i = 0; i + 1 < block.size(); ++i) {
        os << "  " << node(block[i], a) << " -- " << node(block[i + 1], a)
           << " [style=dashed, label=" << quoted("~" + f.agent_names[a]) << "];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace awarekit
