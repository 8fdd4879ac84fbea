#include "awarekit/proof_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "awarekit/parser.hpp"

namespace awarekit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

class LineParser {
 public:
  explicit LineParser(std::size_t file_line) : file_line_(file_line) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ProofFileError(file_line_, msg); }

  std::size_t number(std::string_view s) const {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail("expected a number, found \"" + std::string(s) + "\"");
    return v;
  }

  // 1-based reference to 0-based index.
  std::size_t ref(std::string_view s) const {
    std::size_t v = number(s);
    if (v == 0) fail("line and hypothesis numbers start at 1");
    return v - 1;
  }

  Formula formula(std::string_view s, Metavariables metas = Metavariables::Reject) const {
    try {
      return parse(s, metas);
    } catch (const ParseError& e) {
      fail(std::string("in \"") + std::string(trim(s)) + "\": " + e.what());
    }
  }

  Justification justification(std::string_view text) const {
    auto w = words(text);
    if (w.empty()) fail("missing justification after \"by\"");
    auto arity = [&](std::size_t n) {
      if (w.size() != n + 1) fail("\"" + std::string(w[0]) + "\" takes " + std::to_string(n) + " argument(s)");
    };
    if (auto id = axiom_from_keyword(w[0])) {
      arity(0);
      return just::Axiom{*id};
    }
    if (w[0] == "hyp") { arity(1); return just::Hyp{ref(w[1])}; }
    if (w[0] == "mp") { arity(2); return just::MP{ref(w[1]), ref(w[2])}; }
    if (w[0] == "nec") { arity(1); return just::Nec{ref(w[1])}; }
    if (w[0] == "monoD") { arity(1); return just::MonoD{ref(w[1])}; }
    if (w[0] == "monoR") { arity(1); return just::MonoR{ref(w[1])}; }
    if (w[0] == "cite") return cite(text);
    fail("unknown justification \"" + std::string(w[0]) + "\"");
  }

  just::Cite cite(std::string_view text) const {
    text = trim(text);
    text.remove_prefix(4);  // "cite"
    text = trim(text);
    std::size_t end = 0;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != '[') ++end;
    just::Cite c{std::string(text.substr(0, end)), {}};
    if (c.name.empty()) fail("cite needs a theorem name");
    std::string_view rest = trim(text.substr(end));
    if (rest.empty()) return c;
    if (rest.front() != '[' || rest.back() != ']') fail("cite substitution must be written [Meta=formula, ...]");
    rest = trim(rest.substr(1, rest.size() - 2));
    if (rest.empty()) return c;
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t comma = rest.find(',', start);
      if (comma == std::string_view::npos) comma = rest.size();
      std::string_view item = rest.substr(start, comma - start);
      std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) fail("substitution entries look like Meta=formula");
      std::string meta(trim(item.substr(0, eq)));
      if (!is_metavariable_name(meta)) fail("\"" + meta + "\" is not a metavariable name");
      if (!c.sigma.emplace(meta, formula(item.substr(eq + 1))).second) {
        fail("metavariable " + meta + " bound twice");
      }
      start = comma + 1;
    }
    return c;
  }

 private:
  std::size_t file_line_;
};

// Position of the last standalone word "by" outside square brackets.
std::size_t find_by(std::string_view s) {
  std::size_t found = std::string_view::npos;
  int depth = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (depth == 0 && s[i] == 'b' && s[i + 1] == 'y' &&
        (i == 0 || std::isspace(static_cast<unsigned char>(s[i - 1]))) &&
        (i + 2 == s.size() || std::isspace(static_cast<unsigned char>(s[i + 2])))) {
      found = i;
    }
  }
  return found;
}

std::string render_just(const Justification& j) {
  struct {
    std::string operator()(const just::Axiom& a) const { return axiom_keyword(a.id); }
    std::string operator()(const just::Hyp& h) const { return "hyp " + std::to_string(h.index + 1); }
    std::string operator()(const just::MP& m) const {
      return "mp " + std::to_string(m.minor + 1) + " " + std::to_string(m.major + 1);
    }
    std::string operator()(const just::Nec& n) const { return "nec " + std::to_string(n.line + 1); }
    std::string operator()(const just::MonoD& n) const { return "monoD " + std::to_string(n.line + 1); }
    std::string operator()(const just::MonoR& n) const { return "monoR " + std::to_string(n.line + 1); }
    std::string operator()(const just::Cite& c) const {
      return c.sigma.empty() ? "cite " + c.name : "cite " + c.name + " " + render(c.sigma);
    }
  } v;
  return std::visit(v, j);
}

}  // namespace

ProofFileError::ProofFileError(std::size_t file_line, const std::string& message)
    : std::runtime_error("proof file line " + std::to_string(file_line) + ": " + message),
      file_line_(file_line) {}

ProofScript parse_proof(std::string_view text) {
  ProofScript script;
  bool have_header = false;
  std::size_t header_line = 0;
  std::size_t file_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++file_line;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    LineParser lp(file_line);

    if (!have_header) {
      auto w = words(line);
      if (w[0] == "theorem") {
        if (w.size() != 2) lp.fail("header is \"theorem <name>\"");
        script = ProofScript::theorem(std::string(w[1]));
      } else if (w[0] == "from") {
        std::vector<Formula> hyps;
        std::string_view rest = trim(line.substr(4));
        std::size_t start = 0;
        while (!rest.empty() && start <= rest.size()) {
          std::size_t semi = rest.find(';', start);
          if (semi == std::string_view::npos) semi = rest.size();
          std::string_view item = trim(rest.substr(start, semi - start));
          if (!item.empty()) hyps.push_back(lp.formula(item));
          start = semi + 1;
        }
        script = ProofScript::from(std::move(hyps));
      } else {
        lp.fail("expected \"theorem <name>\" or \"from <formulas>\"");
      }
      have_header = true;
      header_line = file_line;
      continue;
    }

    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) lp.fail("expected \"<n>: <formula> by <justification>\"");
    std::size_t label = lp.number(trim(line.substr(0, colon)));
    if (label != script.lines.size() + 1) {
      lp.fail("expected line label " + std::to_string(script.lines.size() + 1));
    }
    std::string_view body = line.substr(colon + 1);
    std::size_t by = find_by(body);
    if (by == std::string_view::npos) lp.fail("missing \"by <justification>\"");
    Formula f = lp.formula(body.substr(0, by));
    Justification why = lp.justification(body.substr(by + 2));
    script.lines.push_back(ProofLine{std::move(f), std::move(why)});
  }
  if (!have_header) throw ProofFileError(file_line, "missing header");
  if (script.lines.empty()) throw ProofFileError(header_line, "proof has no lines");
  return script;
}

ProofScript load_proof_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProofFileError(0, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_proof(ss.str());
}

std::string render_proof(const ProofScript& script) {
  std::ostringstream os;
  if (script.mode == ProofScript::Mode::Theorem) {
    os << "theorem " << (script.name.empty() ? "unnamed" : script.name) << "\n";
  } else {
    os << "from";
    for (std::size_t i = 0; i < script.hypotheses.size(); ++i) {
      os << (i ? "; " : " ") << render(script.hypotheses[i]);
    }
    os << "\n";
  }
  for (std::size_t k = 0; k < script.lines.size(); ++k) {
    os << k + 1 << ": " << render(script.lines[k].formula) << " by "
       << render_just(script.lines[k].why) << "\n";
  }
  return os.str();
}

}  // namespace awarekit
