#include "fllp/ast.hpp"

#include <algorithm>

namespace fllp {

bool Atom::is_ground() const noexcept {
  return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.is_variable(); });
}

Body Body::leaf(fllp::Atom a) {
  Body b;
  b.kind = Kind::Atom;
  b.atom = std::move(a);
  return b;
}

Body Body::connective(Connective c, std::vector<Body> children) {
  Body b;
  switch (c) {
    case Connective::ConjG: b.kind = Kind::ConjG; break;
    case Connective::ConjL: b.kind = Kind::ConjL; break;
    case Connective::Disj: b.kind = Kind::Disj; break;
  }
  b.children = std::move(children);
  return b;
}

Body Body::hedged(HedgeId h, Body child) {
  Body b;
  b.kind = Kind::Hedge;
  b.hedge = h;
  b.children.push_back(std::move(child));
  return b;
}

std::optional<Connective> Body::connective() const noexcept {
  switch (kind) {
    case Kind::ConjG: return Connective::ConjG;
    case Kind::ConjL: return Connective::ConjL;
    case Kind::Disj: return Connective::Disj;
    default: return std::nullopt;
  }
}

std::string format_term(const Term& t) {
  if (t.is_variable() && t.stamp > 0) return "_" + t.name + std::to_string(t.stamp);
  return t.name;
}

std::string format_atom(const Atom& a) {
  std::string out = a.predicate;
  if (a.args.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_term(a.args[i]);
  }
  out += ')';
  return out;
}

std::string format_body(const Body& b, const HedgeAlgebra& algebra) {
  switch (b.kind) {
    case Body::Kind::Atom: return format_atom(b.atom);
    case Body::Kind::Hedge: return "#" + algebra.hedge(b.hedge).name + "(" + format_body(b.children.at(0), algebra) + ")";
    default: break;
  }
  std::string out = connective_name(*b.connective());
  out += '(';
  for (std::size_t i = 0; i < b.children.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_body(b.children[i], algebra);
  }
  out += ')';
  return out;
}

std::string format_rule(const Rule& r, const TruthDomain& domain) {
  return format_atom(r.head) + (r.implication == Implication::Godel ? " <-g " : " <-l ") +
         format_body(r.body, domain.algebra()) + " : " + domain.name(r.tv) + ".";
}

std::string format_fact(const Fact& f, const TruthDomain& domain) {
  return format_atom(f.atom) + " : " + domain.name(f.tv) + ".";
}

std::string format_program(const Program& p) {
  std::string out;
  if (p.algebra_path) out += "use algebra \"" + *p.algebra_path + "\".\n\n";
  for (const auto& r : p.rules) out += format_rule(r, p.domain()) + "\n";
  for (const auto& f : p.facts) out += format_fact(f, p.domain()) + "\n";
  return out;
}

void collect_variables(const Atom& a, std::vector<Term>& out) {
  for (const auto& t : a.args) {
    if (t.is_variable() && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
}

void collect_variables(const Body& b, std::vector<Term>& out) {
  if (b.kind == Body::Kind::Atom) {
    collect_variables(b.atom, out);
    return;
  }
  for (const auto& c : b.children) collect_variables(c, out);
}

std::vector<Term> variables_of(const Atom& a) {
  std::vector<Term> out;
  collect_variables(a, out);
  return out;
}

std::vector<Term> variables_of(const Body& b) {
  std::vector<Term> out;
  collect_variables(b, out);
  return out;
}

void collect_atoms(const Body& b, std::vector<const Atom*>& out) {
  if (b.kind == Body::Kind::Atom) {
    out.push_back(&b.atom);
    return;
  }
  for (const auto& c : b.children) collect_atoms(c, out);
}

}  // namespace fllp
