#include "fllp/solver.hpp"

#include <algorithm>
#include <ostream>

#include "fllp/error.hpp"

namespace fllp {

Term Substitution::apply(const Term& t) const {
  if (!t.is_variable()) return t;
  auto it = bindings_.find(t);
  return it == bindings_.end() ? t : it->second;
}

Atom Substitution::apply(const Atom& a) const {
  Atom out = a;
  for (auto& t : out.args) t = apply(t);
  return out;
}

void Substitution::bind(const Term& var, const Term& value) {
  if (!var.is_variable()) throw Error("cannot bind constant " + var.name);
  Term v = apply(var);
  Term t = apply(value);
  if (v == t) return;
  if (!v.is_variable()) throw Error("variable " + format_term(var) + " is already bound");
  for (auto& [_, bound] : bindings_) {
    if (bound == v) bound = t;
  }
  bindings_.emplace(v, t);
}

Substitution Substitution::restricted(const std::vector<Term>& vars) const {
  Substitution out;
  for (const auto& v : vars) {
    Term t = apply(v);
    if (t != v) out.bindings_.emplace(v, t);
  }
  return out;
}

std::string format_substitution(const Substitution& s) {
  std::string out;
  for (const auto& [var, value] : s.bindings()) {
    if (!out.empty()) out += ", ";
    out += format_term(var) + "=" + format_term(value);
  }
  return out;
}

bool unify(const Atom& a, const Atom& b, Substitution& s) {
  if (a.predicate != b.predicate || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    Term x = s.apply(a.args[i]);
    Term y = s.apply(b.args[i]);
    if (x == y) continue;
    if (x.is_variable()) {
      s.bind(x, y);
    } else if (y.is_variable()) {
      s.bind(y, x);
    } else {
      return false;
    }
  }
  return true;
}

std::optional<Substitution> mgu(const Atom& a, const Atom& b) {
  Substitution s;
  if (!unify(a, b, s)) return std::nullopt;
  return s;
}

Word Word::from_atom(fllp::Atom a) {
  Word w;
  w.kind = Kind::Atom;
  w.atom = std::move(a);
  return w;
}

Word Word::from_body(const Body& b) {
  Word w;
  switch (b.kind) {
    case Body::Kind::Atom: return from_atom(b.atom);
    case Body::Kind::ConjG: w.kind = Kind::ConjG; break;
    case Body::Kind::ConjL: w.kind = Kind::ConjL; break;
    case Body::Kind::Disj: w.kind = Kind::Disj; break;
    case Body::Kind::Hedge:
      w.kind = Kind::Hedge;
      w.hedge = b.hedge;
      break;
  }
  for (const auto& c : b.children) w.children.push_back(from_body(c));
  return w;
}

Word Word::constant(Degree d) {
  Word w;
  w.kind = Kind::Value;
  w.value = d;
  return w;
}

bool Word::has_atoms() const {
  if (kind == Kind::Atom) return true;
  return std::any_of(children.begin(), children.end(), [](const Word& c) { return c.has_atoms(); });
}

std::string format_word(const Word& w, const Substitution& s, const TruthDomain& domain) {
  const auto& a = domain.algebra();
  auto list = [&](std::string head) {
    head += '(';
    for (std::size_t i = 0; i < w.children.size(); ++i) {
      if (i > 0) head += ", ";
      head += format_word(w.children[i], s, domain);
    }
    return head + ')';
  };
  switch (w.kind) {
    case Word::Kind::Atom: return format_atom(s.apply(w.atom));
    case Word::Kind::ConjG: return list("and_g");
    case Word::Kind::ConjL: return list("and_l");
    case Word::Kind::Disj: return list("or");
    case Word::Kind::Hedge: return list("#" + a.hedge(w.hedge).name);
    case Word::Kind::Inverse: return list(a.hedge(w.hedge).name + "^-");
    case Word::Kind::TNorm:
      return std::string("C_") + implication_name(w.implication) + "(" + format_word(w.children.at(0), s, domain) +
             ", " + domain.name(w.value) + ")";
    case Word::Kind::Value: return domain.name(w.value);
  }
  return "?";
}

namespace {

// Value of the word with every open atom replaced by `atom_value`.
Degree bound(const Word& w, const InverseMappingTable& table, std::optional<Degree> atom_value) {
  Degree top = table.domain().top();
  switch (w.kind) {
    case Word::Kind::Atom:
      if (!atom_value) throw Error("cannot evaluate a word that still contains atoms");
      return *atom_value;
    case Word::Kind::Value: return w.value;
    case Word::Kind::Hedge:
    case Word::Kind::Inverse: return table.apply(w.hedge, bound(w.children.at(0), table, atom_value));
    case Word::Kind::TNorm: return t_norm(w.implication, bound(w.children.at(0), table, atom_value), w.value, top);
    default: break;
  }
  std::vector<Degree> parts;
  parts.reserve(w.children.size());
  for (const auto& c : w.children) parts.push_back(bound(c, table, atom_value));
  Connective c = w.kind == Word::Kind::ConjG ? Connective::ConjG
                 : w.kind == Word::Kind::ConjL ? Connective::ConjL
                                               : Connective::Disj;
  return combine(c, parts, top);
}

using Path = std::vector<std::size_t>;

bool locate(const Word& w, Word::Kind kind, Path& path) {
  if (w.kind == kind) return true;
  for (std::size_t i = 0; i < w.children.size(); ++i) {
    path.push_back(i);
    if (locate(w.children[i], kind, path)) return true;
    path.pop_back();
  }
  return false;
}

Word& at(Word& w, const Path& path) {
  Word* cur = &w;
  for (auto i : path) cur = &cur->children[i];
  return *cur;
}

struct Clause {
  const Fact* fact = nullptr;
  const Rule* rule = nullptr;
  std::size_t order = 0;

  Degree tv() const { return fact ? fact->tv : rule->tv; }
  const Atom& head() const { return fact ? fact->atom : rule->head; }
};

class Search {
 public:
  Search(const Program& p, const Atom& query, const SolveOptions& o)
      : p_(p), table_(*p.truth), domain_(p.domain()), opts_(o), query_vars_(variables_of(query)) {
    for (const auto& f : p.facts) clauses_.push_back({&f, nullptr, clauses_.size()});
    for (const auto& r : p.rules) clauses_.push_back({nullptr, &r, clauses_.size()});
    if (!opts_.exhaustive) {
      std::stable_sort(clauses_.begin(), clauses_.end(), [](const Clause& a, const Clause& b) {
        if (a.tv() != b.tv()) return a.tv() > b.tv();
        if ((a.fact != nullptr) != (b.fact != nullptr)) return a.fact != nullptr;
        if (a.rule && b.rule && a.rule->implication != b.rule->implication) {
          return a.rule->implication == Implication::Godel;
        }
        return a.order < b.order;
      });
    }
    Degree u = domain_.bottom();
    for (const auto& c : clauses_) u = std::max(u, c.tv());
    upper_ = u;
  }

  SolveResult run(const Atom& query) {
    if (opts_.trace) *opts_.trace << "   0  " << format_atom(query) << "\n";
    explore(Word::from_atom(query), Substitution{}, 0);
    return std::move(result_);
  }

 private:
  void trace(std::size_t depth, const std::string& rule, const Word& w, const Substitution& s) {
    if (!opts_.trace) return;
    auto& os = *opts_.trace;
    std::string d = std::to_string(depth);
    os << std::string(d.size() < 4 ? 4 - d.size() : 0, ' ') << d << "  " << rule << ": " << format_word(w, s, domain_);
    auto shown = s.restricted(query_vars_);
    os << " ; " << (shown.empty() ? "id" : "{" + format_substitution(shown) + "}") << "\n";
  }

  bool stop() {
    if (result_.stats.budget_exceeded) return true;
    if (result_.stats.steps >= opts_.max_steps) {
      result_.stats.budget_exceeded = true;
      return true;
    }
    return false;
  }

  void explore(Word w, Substitution s, std::size_t depth) {
    if (stop()) return;
    if (w.kind == Word::Kind::Value) {
      emit(w.value, s, depth);
      return;
    }
    if (opts_.threshold && bound(w, table_, upper_) < *opts_.threshold) {
      ++result_.stats.pruned;
      if (opts_.trace) *opts_.trace << "      pruned below " << domain_.name(*opts_.threshold) << "\n";
      return;
    }
    if (depth >= opts_.depth) {
      ++result_.stats.exhausted;
      if (opts_.trace) *opts_.trace << "      depth bound reached\n";
      return;
    }

    Path path;
    if (locate(w, Word::Kind::Hedge, path)) {
      at(w, path).kind = Word::Kind::Inverse;
      step(std::move(w), std::move(s), depth, 3);
      return;
    }
    if (!locate(w, Word::Kind::Atom, path)) {
      step(Word::constant(bound(w, table_, std::nullopt)), std::move(s), depth, 5);
      return;
    }

    Atom selected = s.apply(at(w, path).atom);
    bool matched = false;
    for (const auto& c : clauses_) {
      if (!may_unify(c.head(), selected)) continue;
      std::uint32_t stamp = ++stamp_;
      Substitution s2 = s;
      if (!unify(rename(c.head(), stamp), selected, s2)) continue;
      matched = true;
      // Atoms in the word are kept instantiated, so the substitution only
      // needs the query variables' bindings.
      Word w2 = instantiate(w, s2);
      Word& node = at(w2, path);
      if (c.fact) {
        node = Word::constant(c.fact->tv);
      } else {
        Word t;
        t.kind = Word::Kind::TNorm;
        t.implication = c.rule->implication;
        t.value = c.rule->tv;
        t.children.push_back(instantiate(Word::from_body(rename(c.rule->body, stamp)), s2));
        node = std::move(t);
      }
      step(std::move(w2), s2.restricted(query_vars_), depth, c.fact ? 4 : 1, c.fact ? c.fact->pos.line : c.rule->pos.line);
      if (stop()) return;
    }
    if (!matched) {
      at(w, path) = Word::constant(domain_.bottom());
      step(std::move(w), std::move(s), depth, 2);
    }
  }

  // Cheap test ahead of copying anything: same predicate and no clashing constants.
  static bool may_unify(const Atom& head, const Atom& goal) {
    if (head.predicate != goal.predicate || head.arity() != goal.arity()) return false;
    for (std::size_t i = 0; i < head.arity(); ++i) {
      const Term& x = head.args[i];
      const Term& y = goal.args[i];
      if (!x.is_variable() && !y.is_variable() && x.name != y.name) return false;
    }
    return true;
  }

  void step(Word w, Substitution s, std::size_t depth, int rule, int line = 0) {
    ++result_.stats.steps;
    if (opts_.trace) {
      std::string label = "rule " + std::to_string(rule);
      if (line > 0) label += " (line " + std::to_string(line) + ")";
      trace(depth + 1, label, w, s);
    }
    explore(std::move(w), std::move(s), depth + 1);
  }

  void emit(Degree tv, const Substitution& s, std::size_t length) {
    if (opts_.threshold && tv < *opts_.threshold) return;
    Answer a{tv, s.restricted(query_vars_), length};
    if (opts_.trace) {
      *opts_.trace << "      answer " << domain_.format(tv) << " ; "
                   << (a.subst.empty() ? "id" : "{" + format_substitution(a.subst) + "}") << "\n";
    }
    if (!opts_.best) {
      result_.answers.push_back(std::move(a));
      return;
    }
    auto [it, fresh] = best_index_.emplace(a.subst, result_.answers.size());
    if (fresh) {
      result_.answers.push_back(std::move(a));
    } else if (result_.answers[it->second].tv < tv) {
      result_.answers[it->second] = std::move(a);
    }
  }

  static Word instantiate(const Word& w, const Substitution& s) {
    Word out;
    out.kind = w.kind;
    out.hedge = w.hedge;
    out.implication = w.implication;
    out.value = w.value;
    if (w.kind == Word::Kind::Atom) out.atom = s.apply(w.atom);
    out.children.reserve(w.children.size());
    for (const auto& c : w.children) out.children.push_back(instantiate(c, s));
    return out;
  }

  static Term rename(const Term& t, std::uint32_t stamp) {
    return t.is_variable() ? Term::variable(t.name, stamp) : t;
  }
  static Atom rename(Atom a, std::uint32_t stamp) {
    for (auto& t : a.args) t = rename(t, stamp);
    return a;
  }
  static Body rename(Body b, std::uint32_t stamp) {
    if (b.kind == Body::Kind::Atom) b.atom = rename(std::move(b.atom), stamp);
    for (auto& c : b.children) c = rename(std::move(c), stamp);
    return b;
  }

  const Program& p_;
  const InverseMappingTable& table_;
  const TruthDomain& domain_;
  SolveOptions opts_;
  std::vector<Term> query_vars_;
  std::vector<Clause> clauses_;
  Degree upper_;
  std::uint32_t stamp_ = 0;
  SolveResult result_;
  std::map<Substitution, std::size_t> best_index_;
};

}  // namespace

Degree evaluate_word(const Word& w, const InverseMappingTable& table) { return bound(w, table, std::nullopt); }

SolveResult solve(const Program& program, const Atom& query, const SolveOptions& options) {
  if (!program.truth) throw Error("program has no truth tables");
  if (options.threshold && !program.domain().contains(*options.threshold)) throw Error("threshold outside the domain");
  return Search(program, query, options).run(query);
}

std::optional<Degree> next_threshold(const InverseMappingTable& table, Degree t, const ThresholdContext& ctx) {
  const auto& d = table.domain();
  Degree top = d.top();
  switch (ctx.kind) {
    case ThresholdContext::Kind::Rule:
      if (ctx.rule_tv < t) return std::nullopt;
      if (t == d.bottom()) return t;
      if (ctx.implication == Implication::Godel) return t;
      return Degree{top.index + t.index - ctx.rule_tv.index};
    case ThresholdContext::Kind::Hedge:
      for (std::uint32_t i = 0; i < d.size(); ++i) {
        if (table.apply(ctx.hedge, Degree{i}) >= t) return Degree{i};
      }
      return std::nullopt;
    case ThresholdContext::Kind::ConjG: return t;
    case ThresholdContext::Kind::ConjL: {
      if (t == d.bottom()) return t;
      std::int64_t u = ctx.upper ? ctx.upper->index : top.index;
      std::int64_t need = std::int64_t{t.index} + std::int64_t(ctx.arity - 1) * (std::int64_t{top.index} - u);
      if (need > top.index) return std::nullopt;
      return Degree{static_cast<std::uint32_t>(need)};
    }
    case ThresholdContext::Kind::Disj: return d.bottom();
  }
  return std::nullopt;
}

}  // namespace fllp
