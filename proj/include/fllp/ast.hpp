#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "fllp/connectives.hpp"
#include "fllp/inverse.hpp"

namespace fllp {

struct Term {
  enum class Kind : std::uint8_t { Constant, Variable };

  Kind kind = Kind::Constant;
  std::string name;
  /// Non-zero for variables renamed apart during resolution.
  std::uint32_t stamp = 0;

  static Term constant(std::string name) { return {Kind::Constant, std::move(name), 0}; }
  static Term variable(std::string name, std::uint32_t stamp = 0) { return {Kind::Variable, std::move(name), stamp}; }

  bool is_variable() const noexcept { return kind == Kind::Variable; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  std::size_t arity() const noexcept { return args.size(); }
  bool is_ground() const noexcept;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct Body {
  enum class Kind : std::uint8_t { Atom, ConjG, ConjL, Disj, Hedge };

  Kind kind = Kind::Atom;
  fllp::Atom atom;       // Kind::Atom
  HedgeId hedge;         // Kind::Hedge
  std::vector<Body> children;

  static Body leaf(fllp::Atom a);
  static Body connective(Connective c, std::vector<Body> children);
  static Body hedged(HedgeId h, Body child);

  /// The connective of a ConjG/ConjL/Disj node.
  std::optional<Connective> connective() const noexcept;

  friend bool operator==(const Body&, const Body&) = default;
};

struct SourcePos {
  int line = 0;
  int column = 0;
};

struct Rule {
  Atom head;
  Implication implication = Implication::Godel;
  Body body;
  Degree tv;
  SourcePos pos;

  /// Positions are ignored.
  friend bool operator==(const Rule& a, const Rule& b) {
    return a.head == b.head && a.implication == b.implication && a.body == b.body && a.tv == b.tv;
  }
};

struct Fact {
  Atom atom;
  Degree tv;
  SourcePos pos;

  friend bool operator==(const Fact& a, const Fact& b) { return a.atom == b.atom && a.tv == b.tv; }
};

struct Program {
  TruthTables truth;
  std::vector<Rule> rules;
  std::vector<Fact> facts;
  /// Path from a `use algebra "..."` directive, if present.
  std::optional<std::string> algebra_path;

  const TruthDomain& domain() const { return truth->domain(); }
  const HedgeAlgebra& algebra() const { return truth->algebra(); }

  /// Rules and facts compared; the truth tables must be the same object.
  friend bool operator==(const Program& a, const Program& b) {
    return a.truth == b.truth && a.rules == b.rules && a.facts == b.facts && a.algebra_path == b.algebra_path;
  }
};

std::string format_term(const Term& t);
std::string format_atom(const Atom& a);
std::string format_body(const Body& b, const HedgeAlgebra& algebra);
std::string format_rule(const Rule& r, const TruthDomain& domain);
std::string format_fact(const Fact& f, const TruthDomain& domain);
/// Source text that parses back to an equal program.
std::string format_program(const Program& p);

/// Distinct variables in order of first occurrence.
std::vector<Term> variables_of(const Atom& a);
std::vector<Term> variables_of(const Body& b);
void collect_variables(const Atom& a, std::vector<Term>& out);
void collect_variables(const Body& b, std::vector<Term>& out);

/// Every atom of a body formula, left to right.
void collect_atoms(const Body& b, std::vector<const Atom*>& out);

}  // namespace fllp
