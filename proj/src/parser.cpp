#include "awarekit/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>

namespace awarekit {

namespace {

std::string describe(const std::vector<std::string>& expected,
                     const std::string& found, std::size_t offset) {
  std::ostringstream os;
  os << "syntax error at offset " << offset << ": found " << found
     << ", expected one of {";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    os << (i ? ", " : "") << expected[i];
  }
  os << "}";
  return os.str();
}

constexpr std::array<std::string_view, 24> kGreek = {
    "Alpha", "Beta", "Gamma",   "Delta", "Epsilon", "Zeta",  "Eta",     "Theta",
    "Iota",  "Kappa", "Lambda", "Mu",    "Nu",      "Xi",    "Omicron", "Pi",
    "Rho",   "Sigma", "Tau",    "Upsilon", "Phi",   "Chi",   "Psi",     "Omega"};

bool is_reserved(std::string_view s) {
  return s == "K" || s == "R" || s == "D" || s == "A" || s == "true" ||
         s == "false";
}

enum class Tok { End, Ident, LParen, RParen, Tilde, Arrow, Bar, Amp, Bad };

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;  // 0-based
  std::string_view text;
};

class Parser {
 public:
  Parser(std::string_view src, Metavariables metas) : src_(src), metas_(metas) {
    advance();
  }

  Formula parse_all() {
    Formula f = parse_impl();
    if (!check(Tok::End, "end of input")) fail();
    return f;
  }

 private:
  void advance() {
    std::size_t i = next_pos_;
    while (i < src_.size() && std::isspace(static_cast<unsigned char>(src_[i]))) {
      ++i;
    }
    expected_.clear();
    if (i >= src_.size()) {
      cur_ = Token{Tok::End, src_.size(), {}};
      next_pos_ = src_.size();
      return;
    }
    char c = src_[i];
    auto single = [&](Tok k) {
      cur_ = Token{k, i, src_.substr(i, 1)};
      next_pos_ = i + 1;
    };
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_')) {
        ++j;
      }
      cur_ = Token{Tok::Ident, i, src_.substr(i, j - i)};
      next_pos_ = j;
      return;
    }
    switch (c) {
      case '(': single(Tok::LParen); return;
      case ')': single(Tok::RParen); return;
      case '~': single(Tok::Tilde); return;
      case '|': single(Tok::Bar); return;
      case '&': single(Tok::Amp); return;
      case '-':
        if (i + 1 < src_.size() && src_[i + 1] == '>') {
          cur_ = Token{Tok::Arrow, i, src_.substr(i, 2)};
          next_pos_ = i + 2;
          return;
        }
        break;
      default:
        break;
    }
    single(Tok::Bad);
  }

  bool check(Tok k, const char* label) {
    if (cur_.kind == k) return true;
    expected_.insert(label);
    return false;
  }

  bool check_word(std::string_view w) {
    if (cur_.kind == Tok::Ident && cur_.text == w) return true;
    expected_.insert(std::string("\"") + std::string(w) + "\"");
    return false;
  }

  [[noreturn]] void fail() {
    std::string found;
    switch (cur_.kind) {
      case Tok::End: found = "end of input"; break;
      default: found = "\"" + std::string(cur_.text) + "\""; break;
    }
    throw ParseError(cur_.pos + 1,
                     std::vector<std::string>(expected_.begin(), expected_.end()),
                     found);
  }

  Formula parse_impl() {
    Formula lhs = parse_disj();
    if (check(Tok::Arrow, "\"->\"")) {
      advance();
      return Formula::implies(lhs, parse_impl());
    }
    return lhs;
  }

  Formula parse_disj() {
    Formula f = parse_conj();
    while (check(Tok::Bar, "\"|\"")) {
      advance();
      f = Formula::disj(f, parse_conj());
    }
    return f;
  }

  Formula parse_conj() {
    Formula f = parse_unary();
    while (check(Tok::Amp, "\"&\"")) {
      advance();
      f = Formula::conj(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    if (check(Tok::Tilde, "\"~\"")) {
      advance();
      return Formula::neg(parse_unary());
    }
    for (auto [word, kind] : {std::pair{"K", Kind::Know}, std::pair{"R", Kind::DeRe},
                              std::pair{"D", Kind::DeDicto}}) {
      if (check_word(word)) {
        advance();
        return Formula::unary(kind, parse_unary());
      }
    }
    if (check_word("A")) {
      advance();
      return awareness_tower(parse_unary(), 1);
    }
    return parse_atom();
  }

  Formula parse_atom() {
    if (check_word("true")) {
      advance();
      return Formula::truth();
    }
    if (check_word("false")) {
      advance();
      return Formula::falsum();
    }
    if (check(Tok::LParen, "\"(\"")) {
      advance();
      Formula f = parse_impl();
      if (!check(Tok::RParen, "\")\"")) fail();
      advance();
      return f;
    }
    if (cur_.kind == Tok::Ident && !is_reserved(cur_.text)) {
      std::string name(cur_.text);
      advance();
      if (metas_ == Metavariables::Greek && is_metavariable_name(name)) {
        return Formula::meta(std::move(name));
      }
      return Formula::atom(std::move(name));
    }
    expected_.insert("identifier");
    fail();
  }

  std::string_view src_;
  Metavariables metas_;
  Token cur_;
  std::size_t next_pos_ = 0;
  std::set<std::string> expected_;
};

// Binding strength: higher binds tighter.
int precedence(Kind k) {
  switch (k) {
    case Kind::Implies: return 1;
    case Kind::Or: return 2;
    case Kind::And: return 3;
    case Kind::Not:
    case Kind::Know:
    case Kind::DeRe:
    case Kind::DeDicto: return 4;
    default: return 5;
  }
}

void render_into(const Formula& f, std::string& out);

void render_operand(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  render_into(f, out);
  if (parens) out += ')';
}

void render_into(const Formula& f, std::string& out) {
  const Kind k = f.kind();
  switch (k) {
    case Kind::Atom:
    case Kind::Meta: out += f.name(); return;
    case Kind::Falsum: out += "false"; return;
    case Kind::Not:
    case Kind::Know:
    case Kind::DeRe:
    case Kind::DeDicto: {
      const bool parens = is_binary(f.child().kind());
      if (k == Kind::Not) {
        out += '~';
      } else {
        out += kind_name(k);
        if (!parens) out += ' ';
      }
      render_operand(f.child(), parens, out);
      return;
    }
    case Kind::Implies:
      // Right-associative: only a left operand of equal strength needs parens.
      render_operand(f.lhs(), precedence(f.lhs().kind()) <= 1, out);
      out += " -> ";
      render_operand(f.rhs(), precedence(f.rhs().kind()) < 1, out);
      return;
    case Kind::Or:
    case Kind::And: {
      const int p = precedence(k);
      render_operand(f.lhs(), precedence(f.lhs().kind()) < p, out);
      out += k == Kind::Or ? " | " : " & ";
      render_operand(f.rhs(), precedence(f.rhs().kind()) <= p, out);
      return;
    }
  }
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       std::string found)
    : std::runtime_error(describe(expected, found, offset)),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])) || is_reserved(s)) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_metavariable_name(std::string_view ident) {
  for (std::string_view g : kGreek) {
    if (ident.substr(0, g.size()) != g) continue;
    std::string_view rest = ident.substr(g.size());
    if (std::all_of(rest.begin(), rest.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c)) || c == '_';
        })) {
      return true;
    }
  }
  return false;
}

Formula parse(std::string_view text, Metavariables metas) {
  return Parser(text, metas).parse_all();
}

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

}  // namespace awarekit
