#include "fllp/prolog.hpp"

#include <set>

#include "fllp/error.hpp"

namespace fllp {

namespace {

std::string call(const std::string& predicate, const std::vector<std::string>& args) {
  std::string out = predicate + "(";
  for (std::size_t i = 0; i < args.size(); ++i) out += (i > 0 ? "," : "") + args[i];
  return out + ")";
}

std::vector<std::string> arg_text(const Atom& a) {
  std::vector<std::string> out;
  for (const auto& t : a.args) out.push_back(format_term(t));
  return out;
}

const char* connective_call(Connective c) {
  switch (c) {
    case Connective::ConjG: return "and_godel";
    case Connective::ConjL: return "and_luka";
    case Connective::Disj: return "or_godel";
  }
  return "?";
}

class RuleWriter {
 public:
  explicit RuleWriter(const HedgeAlgebra& a) : algebra_(a) {}

  std::string write(const Rule& r) {
    auto head = arg_text(r.head);
    head.push_back("_TV0");
    std::string body_var = emit(r.body);
    calls_.push_back(call(r.implication == Implication::Godel ? "and_godel" : "and_luka",
                          {body_var, std::to_string(r.tv.index), "_TV0"}));
    std::string out = call(r.head.predicate, head) + " :- ";
    for (std::size_t i = 0; i < calls_.size(); ++i) out += (i > 0 ? ", " : "") + calls_[i];
    return out + ".";
  }

 private:
  std::string fresh() { return "_TV" + std::to_string(++counter_); }

  // Emits the calls computing b and returns the variable holding its value.
  std::string emit(const Body& b) {
    if (b.kind == Body::Kind::Atom) {
      auto args = arg_text(b.atom);
      std::string v = fresh();
      args.push_back(v);
      calls_.push_back(call(b.atom.predicate, args));
      return v;
    }
    if (b.kind == Body::Kind::Hedge) {
      std::string inner = emit(b.children.at(0));
      std::string v = fresh();
      calls_.push_back(call("inv_map", {algebra_.hedge(b.hedge).symbol, inner, v}));
      return v;
    }
    std::vector<std::string> parts;
    for (const auto& c : b.children) parts.push_back(emit(c));
    std::string acc = parts.at(0);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      std::string v = fresh();
      calls_.push_back(call(connective_call(*b.connective()), {acc, parts[i], v}));
      acc = v;
    }
    return acc;
  }

  const HedgeAlgebra& algebra_;
  std::vector<std::string> calls_;
  int counter_ = 0;
};

void predicates_of(const Body& b, std::set<std::pair<std::string, std::size_t>>& out) {
  std::vector<const Atom*> atoms;
  collect_atoms(b, atoms);
  for (const auto* a : atoms) out.emplace(a->predicate, a->arity());
}

}  // namespace

std::string compile_clauses(const Program& p) {
  std::string out;
  for (const auto& r : p.rules) out += RuleWriter(p.algebra()).write(r) + "\n";
  for (const auto& f : p.facts) {
    auto args = arg_text(f.atom);
    args.push_back(std::to_string(f.tv.index));
    out += call(f.atom.predicate, args) + ".\n";
  }
  return out;
}

std::string compile_program(const Program& p) {
  const auto& d = p.domain();
  const auto& a = p.algebra();
  const std::string n = std::to_string(d.top().index);
  std::string out;

  out += "% Truth values by index:\n";
  for (std::uint32_t i = 0; i < d.size(); ++i) out += "%   " + std::to_string(i) + " = " + d.name(Degree{i}) + "\n";
  out += "\n";
  out += "and_godel(X,Y,Z) :- (X=<Y,Z=X;X>Y,Z=Y).\n";
  out += "and_luka(X,Y,Z) :- H is X+Y-" + n + ",(H=<0,Z=0;H>0,Z=H).\n";
  out += "or_godel(X,Y,Z) :- (X=<Y,Z=Y;X>Y,Z=X).\n\n";

  std::set<std::pair<std::string, std::size_t>> preds;
  for (const auto& r : p.rules) {
    preds.emplace(r.head.predicate, r.head.arity());
    predicates_of(r.body, preds);
  }
  for (const auto& f : p.facts) preds.emplace(f.atom.predicate, f.atom.arity());
  for (const char* helper : {"and_godel", "and_luka", "or_godel", "inv_map"}) {
    if (preds.count({helper, 2})) {
      throw Error(std::string("predicate ") + helper + "/2 would clash with the generated " + helper + "/3");
    }
  }
  for (const auto& [name, arity] : preds) out += ":- dynamic(" + name + "/" + std::to_string(arity + 1) + ").\n";
  if (!preds.empty()) out += "\n";

  const auto& table = *p.truth;
  for (std::uint32_t i = 0; i < d.size(); ++i) {
    Degree x{i};
    if (!d.value(x).is_term()) {
      out += "inv_map(H," + std::to_string(i) + "," + std::to_string(i) + ").\n";
      continue;
    }
    for (std::size_t h = 0; h < a.hedge_count(); ++h) {
      HedgeId id{static_cast<std::uint16_t>(h)};
      out += call("inv_map", {a.hedge(id).symbol, std::to_string(i), std::to_string(table.apply(id, x).index)}) + ".\n";
    }
  }
  out += "\n";
  out += compile_clauses(p);
  return out;
}

std::string compile_query(const Atom& query) {
  std::string tv = "Truth_value";
  auto vars = variables_of(query);
  auto taken = [&](const std::string& name) {
    for (const auto& v : vars) {
      if (format_term(v) == name) return true;
    }
    return false;
  };
  for (int k = 1; taken(tv); ++k) tv = "Truth_value" + std::to_string(k);
  auto args = arg_text(query);
  args.push_back(tv);
  return "?- " + call(query.predicate, args) + ".";
}

}  // namespace fllp
