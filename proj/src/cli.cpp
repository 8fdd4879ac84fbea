#include "awarekit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "awarekit/builtin.hpp"
#include "awarekit/checker.hpp"
#include "awarekit/explain.hpp"
#include "awarekit/fuzz.hpp"
#include "awarekit/model_io.hpp"
#include "awarekit/parser.hpp"
#include "awarekit/proof_io.hpp"
#include "awarekit/search.hpp"

namespace awarekit {

namespace {

using json = nlohmann::ordered_json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

// Bad input from the user: exit 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Formula parse_arg(const std::string& text, Metavariables metas = Metavariables::Reject) {
  try {
    return parse(text, metas);
  } catch (const ParseError& e) {
    throw InputError("cannot parse \"" + text + "\": " + e.what());
  }
}

std::vector<std::string> split_props(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Without --props, the formula's own atoms (or p if it has none).
Bounds make_bounds(std::size_t w, std::size_t a, const std::string& props, const Formula* f) {
  Bounds b;
  b.max_worlds = w;
  b.max_agents = a;
  if (!props.empty()) {
    b.props = split_props(props);
  } else if (f != nullptr && !atoms_of(*f).empty()) {
    auto atoms = atoms_of(*f);
    b.props.assign(atoms.begin(), atoms.end());
  }
  b.check();
  return b;
}

json bounds_json(const Bounds& b) {
  return json{{"max_worlds", b.max_worlds}, {"max_agents", b.max_agents}, {"props", b.props}};
}

json model_json(const ModelFile& f) { return json::parse(to_json(f)); }

json point_json(const ModelFile& f, Point pt) {
  return json{{"world", f.world_names[pt.world]}, {"agent", f.agent_names[pt.agent]}};
}

std::string point_text(const ModelFile& f, Point pt) {
  return "world " + f.world_names[pt.world] + ", agent " + f.agent_names[pt.agent];
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path);
  if (!o) throw InputError("cannot write " + path);
  o << text;
}

ModelFile load_valid_model(const std::string& path) {
  ModelFile mf = load_model_file(path);
  auto violations = validate(mf.model);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "invalid model " << path << ":";
    for (const Violation& v : violations) {
      os << "\n  " << rule_description(v.rule) << ": " << v.message;
    }
    throw InputError(os.str());
  }
  return mf;
}

// --- subcommands ---

struct CheckArgs {
  std::string model, world, agent, formula;
  bool explain = false;
  bool json = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  ModelFile mf = load_valid_model(a.model);
  const std::size_t w = mf.world_index(a.world);
  const std::size_t ag = mf.agent_index(a.agent);
  const Formula f = parse_arg(a.formula);
  if (!mf.model.presence.contains(ag, w)) {
    throw InputError("agent " + a.agent + " is not present in world " + a.world +
                     "; formulas are only evaluated at points where the agent is present");
  }
  const Point pt{w, ag};
  const bool holds = satisfies(mf.model, pt, f);
  if (a.json) {
    json j{{"world", a.world}, {"agent", a.agent}, {"formula", render(f)}, {"holds", holds}};
    if (a.explain) j["explanation"] = explain(mf, pt, f);
    out << j.dump(2) << "\n";
  } else {
    out << (holds ? "true" : "false") << "\n";
    if (a.explain) out << explain(mf, pt, f);
  }
  return holds ? kHolds : kFails;
}

struct ValidArgs {
  std::string formula;
  std::size_t max_worlds = 2;
  std::size_t max_agents = 2;
  std::string props;
  std::string dot;
  std::string model_out;
  bool prune = false;
  bool json = false;
};

int cmd_valid(const ValidArgs& a, std::ostream& out) {
  const Formula f = parse_arg(a.formula);
  const Bounds b = make_bounds(a.max_worlds, a.max_agents, a.props, &f);
  SearchOptions opts;
  opts.symmetry_pruning = a.prune;
  Verdict v = decide_bounded(f, b, opts);

  if (const auto* ok = std::get_if<ValidUpToBounds>(&v)) {
    if (a.json) {
      out << json{{"verdict", "valid_up_to_bounds"},
                  {"formula", render(f)},
                  {"bounds", bounds_json(ok->bounds)},
                  {"models_checked", ok->models_checked}}
                 .dump(2)
          << "\n";
    } else {
      out << "valid up to bounds (" << ok->models_checked << " models)\n";
    }
    return kHolds;
  }

  const auto& cm = std::get<Countermodel>(v);
  const ModelFile mf = ModelFile::named(cm.model);
  if (!a.dot.empty()) write_file(a.dot, to_dot(mf, {cm.point}));
  if (!a.model_out.empty()) write_file(a.model_out, to_json(mf) + "\n");
  if (a.json) {
    out << json{{"verdict", "countermodel"},
                {"formula", render(f)},
                {"bounds", bounds_json(b)},
                {"point", point_json(mf, cm.point)},
                {"model", model_json(mf)}}
               .dump(2)
        << "\n";
  } else {
    out << "countermodel: falsified at " << point_text(mf, cm.point) << "\n" << to_json(mf) << "\n";
  }
  return kFails;
}

struct ProveArgs {
  std::string file;
  std::string builtin;
  std::vector<std::size_t> params;
  bool print = false;
  bool json = false;
};

int cmd_prove(const ProveArgs& a, std::ostream& out) {
  if (a.file.empty() == a.builtin.empty()) {
    throw InputError("give either a proof file or --builtin NAME");
  }
  ProofScript script;
  if (!a.builtin.empty()) {
    try {
      script = builtin(a.builtin, a.params);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  } else {
    try {
      script = load_proof_file(a.file);
    } catch (const ProofFileError& e) {
      throw InputError(a.file + ": " + e.what());
    }
  }
  if (a.print) out << render_proof(script);

  const TheoremRegistry registry = default_registry();
  try {
    const Formula conclusion = check(script, registry);
    if (a.json) {
      out << json{{"ok", true}, {"conclusion", render(conclusion)}, {"lines", script.lines.size()}}
                 .dump(2)
          << "\n";
    } else {
      out << "conclusion: " << render(conclusion) << "\n";
    }
    return kHolds;
  } catch (const ProofError& e) {
    if (a.json) {
      out << json{{"ok", false}, {"line", e.line() + 1}, {"rule", e.rule()}, {"reason", e.reason()}}
                 .dump(2)
          << "\n";
    } else {
      out << e.what() << "\n";
    }
    return kFails;
  }
}

struct FuzzArgs {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t max_worlds = 4;
  std::size_t max_agents = 4;
  std::string props = "p,q,r";
  std::size_t pool_depth = 3;
  std::size_t instances = 10;
  bool json = false;
};

int cmd_fuzz(const FuzzArgs& a, std::ostream& out) {
  if (a.trials == 0) throw InputError("--trials must be at least 1");
  const Bounds b = make_bounds(a.max_worlds, a.max_agents, a.props, nullptr);
  FuzzOptions opts;
  opts.instances_per_schema = a.instances;
  const FuzzReport r = fuzz_soundness(a.trials, a.seed, b, a.pool_depth, opts);

  if (a.json) {
    json vs = json::array();
    for (const FuzzViolation& v : r.violations) {
      const ModelFile mf = ModelFile::named(v.model);
      json sigma = json::object();
      for (const auto& [k, f] : v.sigma) sigma[k] = render(f);
      vs.push_back(json{{"schema", v.schema},
                        {"substitution", sigma},
                        {"point", point_json(mf, v.point)},
                        {"model", model_json(mf)}});
    }
    out << json{{"trials", r.trials},
                {"seed", a.seed},
                {"bounds", bounds_json(b)},
                {"pool_depth", a.pool_depth},
                {"schema_instances_checked", r.schema_instances_checked},
                {"violations", vs}}
               .dump(2)
        << "\n";
  } else {
    out << "trials: " << r.trials << "\n"
        << "schema instances checked: " << r.schema_instances_checked << "\n"
        << "violations: " << r.violations.size() << "\n";
    for (const FuzzViolation& v : r.violations) {
      const ModelFile mf = ModelFile::named(v.model);
      out << "  " << v.schema << " " << render(v.sigma) << " fails at " << point_text(mf, v.point)
          << " of " << to_json(mf, -1) << "\n";
    }
  }
  return r.violations.empty() ? kHolds : kFails;
}

int cmd_lint(const std::string& path, bool as_json, std::ostream& out) {
  const ModelFile mf = load_model_file(path);
  const auto violations = validate(mf.model);
  if (as_json) {
    json vs = json::array();
    for (const Violation& v : violations) {
      vs.push_back(json{{"rule", rule_description(v.rule)}, {"message", v.message}});
    }
    out << json{{"valid", violations.empty()},
                {"worlds", mf.model.world_count},
                {"agents", mf.model.agent_count},
                {"violations", vs}}
               .dump(2)
        << "\n";
  } else if (violations.empty()) {
    out << "ok: " << mf.model.world_count << " worlds, " << mf.model.agent_count << " agents\n";
  } else {
    for (const Violation& v : violations) {
      out << rule_description(v.rule) << ": " << v.message << "\n";
    }
  }
  return violations.empty() ? kHolds : kFails;
}

int cmd_expand(const std::string& text, std::size_t n, bool as_json, std::ostream& out) {
  const Formula f = parse_arg(text, Metavariables::Greek);
  const Formula t = awareness_tower(f, n);
  if (as_json) {
    out << json{{"formula", render(f)}, {"n", n}, {"expanded", render(t)}}.dump(2) << "\n";
  } else {
    out << render(t) << "\n";
  }
  return kHolds;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Model checking, proof checking and bounded validity for de re / de dicto awareness",
               "awarekit");
  app.require_subcommand(1);
  std::function<int()> action;

  CheckArgs ca;
  auto* check_cmd = app.add_subcommand("check", "Evaluate a formula at a point of a model file");
  check_cmd->add_option("model", ca.model, "Model file (JSON)")->required();
  check_cmd->add_option("world", ca.world, "World name")->required();
  check_cmd->add_option("agent", ca.agent, "Agent name")->required();
  check_cmd->add_option("formula", ca.formula, "Formula")->required();
  check_cmd->add_flag("--explain", ca.explain, "Show witnesses and failures");
  check_cmd->add_flag("--json", ca.json, "Machine-readable output");
  check_cmd->callback([&] { action = [&] { return cmd_check(ca, out); }; });

  ValidArgs va;
  auto* valid_cmd = app.add_subcommand("valid", "Search all models up to the bounds for a countermodel");
  valid_cmd->add_option("formula", va.formula, "Formula")->required();
  valid_cmd->add_option("--max-worlds", va.max_worlds, "At most this many worlds")->capture_default_str();
  valid_cmd->add_option("--max-agents", va.max_agents, "At most this many agents")->capture_default_str();
  valid_cmd->add_option("--props", va.props, "Comma-separated propositions (default: the formula's atoms)");
  valid_cmd->add_option("--dot", va.dot, "Write the countermodel as Graphviz DOT");
  valid_cmd->add_option("--model-out", va.model_out, "Write the countermodel as a model file");
  valid_cmd->add_flag("--prune", va.prune, "Skip models isomorphic to an earlier one");
  valid_cmd->add_flag("--json", va.json, "Machine-readable output");
  valid_cmd->callback([&] { action = [&] { return cmd_valid(va, out); }; });

  ProveArgs pa;
  auto* prove_cmd = app.add_subcommand("prove", "Check a proof file or a builtin derivation");
  prove_cmd->add_option("file", pa.file, "Proof file");
  prove_cmd->add_option("--builtin", pa.builtin,
                        "positive_introspection, lemma_A, unaware_top or mono_A");
  prove_cmd->add_option("--param", pa.params, "Builtin parameter (repeatable)");
  prove_cmd->add_flag("--print", pa.print, "Print the proof before checking it");
  prove_cmd->add_flag("--json", pa.json, "Machine-readable output");
  prove_cmd->callback([&] { action = [&] { return cmd_prove(pa, out); }; });

  FuzzArgs fa;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Check axiom instances on random models");
  fuzz_cmd->add_option("--trials", fa.trials, "Number of random models")->capture_default_str();
  fuzz_cmd->add_option("--seed", fa.seed, "Seed")->capture_default_str();
  fuzz_cmd->add_option("--max-worlds", fa.max_worlds, "At most this many worlds")->capture_default_str();
  fuzz_cmd->add_option("--max-agents", fa.max_agents, "At most this many agents")->capture_default_str();
  fuzz_cmd->add_option("--props", fa.props, "Comma-separated propositions")->capture_default_str();
  fuzz_cmd->add_option("--pool-depth", fa.pool_depth, "Depth of substituted formulas")->capture_default_str();
  fuzz_cmd->add_option("--instances", fa.instances, "Substitutions per schema per model")->capture_default_str();
  fuzz_cmd->add_flag("--json", fa.json, "Machine-readable output");
  fuzz_cmd->callback([&] { action = [&] { return cmd_fuzz(fa, out); }; });

  std::string lint_path;
  bool lint_json = false;
  auto* lint_cmd = app.add_subcommand("lint", "Validate a model file");
  lint_cmd->add_option("model", lint_path, "Model file (JSON)")->required();
  lint_cmd->add_flag("--json", lint_json, "Machine-readable output");
  lint_cmd->callback([&] { action = [&] { return cmd_lint(lint_path, lint_json, out); }; });

  std::string expand_formula;
  std::size_t expand_n = 1;
  bool expand_json = false;
  auto* expand_cmd = app.add_subcommand("expand", "Print the n-fold awareness tower of a formula");
  expand_cmd->add_option("formula", expand_formula, "Formula (Phi, Psi, ... allowed)")->required();
  expand_cmd->add_option("n", expand_n, "Height")->required();
  expand_cmd->add_flag("--json", expand_json, "Machine-readable output");
  expand_cmd->callback([&] { action = [&] { return cmd_expand(expand_formula, expand_n, expand_json, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kHolds : kUsage;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"awarekit"};
  for (const std::string& s : args) argv.push_back(s.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace awarekit
