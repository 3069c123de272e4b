#include "fllp/parser.hpp"

#include <cctype>
#include <map>

#include "fllp/error.hpp"

namespace fllp {

namespace {

enum class Tok { Ident, Var, String, LParen, RParen, Comma, Dot, Colon, Hash, ArrowG, ArrowL, Query, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "a name";
    case Tok::Var: return "a variable";
    case Tok::String: return "a string";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Colon: return "':'";
    case Tok::Hash: return "'#'";
    case Tok::ArrowG: return "'<-g'";
    case Tok::ArrowL: return "'<-l'";
    case Tok::Query: return "'?-'";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.pos = {line_, col_};
      if (i_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[i_];
      if (std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = i_;
        while (i_ < src_.size() && word_char(src_[i_])) advance();
        t.text = std::string(src_.substr(start, i_ - start));
        if (c == '_') throw ParseError("variables may not start with '_'", t.pos.line, t.pos.column);
        t.kind = std::isupper(static_cast<unsigned char>(c)) ? Tok::Var : Tok::Ident;
      } else if (c == '"') {
        advance();
        std::size_t start = i_;
        while (i_ < src_.size() && src_[i_] != '"' && src_[i_] != '\n') advance();
        if (i_ >= src_.size() || src_[i_] != '"') throw ParseError("unterminated string", t.pos.line, t.pos.column);
        t.text = std::string(src_.substr(start, i_ - start));
        advance();
        t.kind = Tok::String;
      } else if (c == '<') {
        if (src_.substr(i_, 3) == "<-g" || src_.substr(i_, 3) == "<-l") {
          if (i_ + 3 < src_.size() && word_char(src_[i_ + 3])) {
            throw ParseError("expected '<-g' or '<-l'", t.pos.line, t.pos.column);
          }
          t.kind = src_[i_ + 2] == 'g' ? Tok::ArrowG : Tok::ArrowL;
          t.text = std::string(src_.substr(i_, 3));
          advance(3);
        } else {
          throw ParseError("expected '<-g' or '<-l'", t.pos.line, t.pos.column);
        }
      } else if (c == '?' && src_.substr(i_, 2) == "?-") {
        t.kind = Tok::Query;
        t.text = "?-";
        advance(2);
      } else {
        switch (c) {
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case ',': t.kind = Tok::Comma; break;
          case '.': t.kind = Tok::Dot; break;
          case ':': t.kind = Tok::Colon; break;
          case '#': t.kind = Tok::Hash; break;
          default: throw ParseError(std::string("unexpected character '") + c + "'", t.pos.line, t.pos.column);
        }
        t.text = std::string(1, c);
        advance();
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void advance(std::size_t n = 1) {
    for (; n > 0 && i_ < src_.size(); --n, ++i_) {
      if (src_[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  void skip_space() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == '%') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const TruthTables& truth) : toks_(Lexer(text).run()), truth_(truth) {}

  Program program() {
    Program p;
    p.truth = truth_;
    p.algebra_path = directive();
    while (peek().kind != Tok::End) statement(p);
    return p;
  }

  std::optional<std::string> directive() {
    if (peek().kind != Tok::Ident || peek().text != "use") return std::nullopt;
    // `use` could also be a predicate name; only treat it as the directive when followed by `algebra`.
    if (pos_ + 1 >= toks_.size() || toks_[pos_ + 1].kind != Tok::Ident || toks_[pos_ + 1].text != "algebra") return std::nullopt;
    next();
    next();
    auto path = expect(Tok::String).text;
    expect(Tok::Dot);
    return path;
  }

  Atom query() {
    if (peek().kind == Tok::Query) next();
    Atom a = atom();
    if (peek().kind == Tok::Dot) next();
    if (peek().kind != Tok::End) fail("unexpected " + std::string(describe(peek().kind)) + " after query");
    return a;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, peek().pos); }
  [[noreturn]] static void fail_at(const std::string& msg, SourcePos p) { throw ParseError(msg, p.line, p.column); }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) fail(std::string("expected ") + describe(kind) + ", found " + found());
    return next();
  }

  std::string found() const {
    const auto& t = peek();
    if (t.kind == Tok::End) return describe(t.kind);
    return "'" + t.text + "'";
  }

  void statement(Program& p) {
    if (peek().kind == Tok::Query) fail("queries are given on the command line, not in program files");
    if (peek().kind == Tok::Ident && peek().text == "use") {
      if (pos_ + 1 < toks_.size() && toks_[pos_ + 1].kind == Tok::Ident && toks_[pos_ + 1].text == "algebra") {
        fail("'use algebra' must come before any statement");
      }
    }
    SourcePos at = peek().pos;
    Atom head = atom();
    if (peek().kind == Tok::Colon) {
      next();
      Degree tv = literal();
      expect(Tok::Dot);
      p.facts.push_back(Fact{std::move(head), tv, at});
      return;
    }
    Implication impl;
    if (peek().kind == Tok::ArrowG) {
      impl = Implication::Godel;
    } else if (peek().kind == Tok::ArrowL) {
      impl = Implication::Lukasiewicz;
    } else {
      fail("expected ':', '<-g' or '<-l', found " + found());
    }
    next();
    Body b = body();
    expect(Tok::Colon);
    Degree tv = literal();
    expect(Tok::Dot);
    p.rules.push_back(Rule{std::move(head), impl, std::move(b), tv, at});
  }

  Body body() {
    if (peek().kind == Tok::Hash) {
      next();
      const Token& name = expect(Tok::Ident);
      auto h = truth_->algebra().find_hedge(name.text);
      if (!h) fail_at("unknown hedge '" + name.text + "'", name.pos);
      expect(Tok::LParen);
      Body inner = body();
      expect(Tok::RParen);
      return Body::hedged(*h, std::move(inner));
    }
    if (peek().kind == Tok::Ident) {
      static const std::map<std::string, Connective> kConnectives{
          {"and_g", Connective::ConjG}, {"and_l", Connective::ConjL}, {"or", Connective::Disj}};
      auto it = kConnectives.find(peek().text);
      if (it != kConnectives.end()) {
        SourcePos at = next().pos;
        expect(Tok::LParen);
        std::vector<Body> parts;
        parts.push_back(body());
        while (peek().kind == Tok::Comma) {
          next();
          parts.push_back(body());
        }
        expect(Tok::RParen);
        if (parts.size() < 2) fail_at(std::string("'") + it->first + "' needs at least two arguments", at);
        return Body::connective(it->second, std::move(parts));
      }
    }
    return Body::leaf(atom());
  }

  Atom atom() {
    if (peek().kind == Tok::Var) fail("expected a predicate name, found variable '" + peek().text + "'");
    const Token& name = expect(Tok::Ident);
    if (std::isdigit(static_cast<unsigned char>(name.text[0]))) {
      fail_at("predicate names must start with a lower-case letter", name.pos);
    }
    if (name.text == "and_g" || name.text == "and_l" || name.text == "or") {
      fail_at("'" + name.text + "' is a connective, not a predicate", name.pos);
    }
    Atom a;
    a.predicate = name.text;
    if (peek().kind != Tok::LParen) return a;
    next();
    a.args.push_back(term());
    while (peek().kind == Tok::Comma) {
      next();
      a.args.push_back(term());
    }
    expect(Tok::RParen);
    return a;
  }

  Term term() {
    if (peek().kind == Tok::Var) return Term::variable(next().text);
    if (peek().kind == Tok::Ident) return Term::constant(next().text);
    fail("expected a constant or variable, found " + found());
  }

  Degree literal() {
    SourcePos at = peek().pos;
    std::string text;
    while (peek().kind == Tok::Ident) {
      if (!text.empty()) text += ' ';
      text += next().text;
    }
    if (text.empty()) fail("expected a truth value, found " + found());
    Degree d;
    try {
      d = truth_->domain().parse(text);
    } catch (const Error& e) {
      fail_at(e.what(), at);
    }
    if (d == truth_->domain().bottom()) fail_at("truth value must be greater than absfalse", at);
    return d;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  TruthTables truth_;
};

// Variables renamed by first occurrence, so statements equal up to renaming compare equal.
struct Canonical {
  std::map<Term, Term> names;

  Term operator()(const Term& t) {
    if (!t.is_variable()) return t;
    auto [it, fresh] = names.emplace(t, Term::variable("V" + std::to_string(names.size())));
    return it->second;
  }
  Atom operator()(Atom a) {
    for (auto& t : a.args) t = (*this)(t);
    return a;
  }
  Body operator()(Body b) {
    if (b.kind == Body::Kind::Atom) b.atom = (*this)(std::move(b.atom));
    for (auto& c : b.children) c = (*this)(std::move(c));
    return b;
  }
};

void check_body(const Body& b, const Program& p, SourcePos at, std::vector<Diagnostic>& out) {
  if (b.kind == Body::Kind::Hedge) {
    if (b.hedge.value >= p.algebra().hedge_count()) out.push_back({at, "undeclared hedge in body"});
    if (b.children.size() != 1) out.push_back({at, "hedge node must have exactly one argument"});
  } else if (b.kind != Body::Kind::Atom && b.children.size() < 2) {
    out.push_back({at, std::string("'") + connective_name(*b.connective()) + "' needs at least two arguments"});
  }
  for (const auto& c : b.children) check_body(c, p, at, out);
}

}  // namespace

std::optional<std::string> find_algebra_directive(std::string_view text) {
  Parser p(text, nullptr);
  return p.directive();
}

Program parse_program(std::string_view text, TruthTables truth) {
  if (!truth) throw Error("no truth tables given");
  return Parser(text, truth).program();
}

Atom parse_query(std::string_view text) { return Parser(text, nullptr).query(); }

std::vector<Diagnostic> validate_program(const Program& p, const ValidationOptions& options) {
  std::vector<Diagnostic> out;
  const auto& d = p.domain();

  std::map<Atom, const Fact*> facts;
  for (const auto& f : p.facts) {
    if (!d.contains(f.tv) || f.tv == d.bottom()) out.push_back({f.pos, "fact " + format_atom(f.atom) + " needs a truth value above absfalse"});
    Atom key = Canonical{}(f.atom);
    auto [it, fresh] = facts.emplace(key, &f);
    if (!fresh && it->second->tv != f.tv) {
      out.push_back({f.pos, "fact " + format_atom(f.atom) + " repeats line " + std::to_string(it->second->pos.line) +
                                " with a different truth value"});
    }
    if (options.safe && !f.atom.is_ground()) out.push_back({f.pos, "fact " + format_atom(f.atom) + " contains variables"});
  }

  std::map<std::pair<Atom, std::pair<Implication, std::string>>, const Rule*> rules;
  for (const auto& r : p.rules) {
    if (!d.contains(r.tv) || r.tv == d.bottom()) out.push_back({r.pos, "rule for " + format_atom(r.head) + " needs a truth value above absfalse"});
    check_body(r.body, p, r.pos, out);
    Canonical canon;
    Atom head = canon(r.head);
    std::string body = format_body(canon(r.body), p.algebra());
    auto [it, fresh] = rules.emplace(std::make_pair(head, std::make_pair(r.implication, body)), &r);
    if (!fresh && it->second->tv != r.tv) {
      out.push_back({r.pos, "rule for " + format_atom(r.head) + " repeats line " + std::to_string(it->second->pos.line) +
                                " with a different truth value"});
    }
    if (options.safe) {
      auto in_body = variables_of(r.body);
      for (const auto& v : variables_of(r.head)) {
        if (std::find(in_body.begin(), in_body.end(), v) == in_body.end()) {
          out.push_back({r.pos, "unsafe variable " + v.name + " in head of " + format_atom(r.head) + " does not occur in the body"});
        }
      }
    }
  }
  return out;
}

std::string format_diagnostic(const Diagnostic& d) {
  return std::to_string(d.pos.line) + ":" + std::to_string(d.pos.column) + ": " + d.message;
}

}  // namespace fllp
