#include "fllp/fixpoint.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "fllp/error.hpp"

namespace fllp {

namespace {

void collect_constants(const Atom& a, std::set<std::string>& out) {
  for (const auto& t : a.args) {
    if (!t.is_variable()) out.insert(t.name);
  }
}

void collect_predicates(const Body& b, std::set<std::pair<std::string, std::size_t>>& out) {
  std::vector<const Atom*> atoms;
  collect_atoms(b, atoms);
  for (const auto* a : atoms) out.emplace(a->predicate, a->arity());
}

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::size_t>::max() / base) return std::numeric_limits<std::size_t>::max();
    r *= base;
  }
  return r;
}

// Calls f with every assignment of universe constants to vars.
template <typename F>
void for_each_grounding(const std::vector<Term>& vars, const std::vector<std::string>& universe, F&& f) {
  std::vector<std::size_t> pick(vars.size(), 0);
  for (;;) {
    Substitution g;
    for (std::size_t i = 0; i < vars.size(); ++i) g.bind(vars[i], Term::constant(universe[pick[i]]));
    f(g);
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == universe.size()) pick[i++] = 0;
    if (i == pick.size()) return;
  }
}

}  // namespace

std::optional<AtomId> GroundProgram::find(const Atom& ground) const {
  auto it = ids_.find(ground);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

AtomId GroundProgram::intern(const Atom& a) {
  auto [it, fresh] = ids_.emplace(a, static_cast<AtomId>(atoms_.size()));
  if (fresh) atoms_.push_back(a);
  return it->second;
}

std::size_t GroundProgram::base_size() const {
  std::size_t total = 0;
  for (const auto& [_, arity] : predicates_) {
    std::size_t n = saturating_pow(universe_.size(), arity);
    total = n > std::numeric_limits<std::size_t>::max() - total ? std::numeric_limits<std::size_t>::max() : total + n;
  }
  return total;
}

GroundProgram ground(const Program& p, const GroundOptions& options) {
  if (!p.truth) throw Error("program has no truth tables");
  GroundProgram gp;
  gp.truth_ = p.truth;

  std::set<std::string> constants;
  std::set<std::pair<std::string, std::size_t>> preds;
  for (const auto& f : p.facts) {
    collect_constants(f.atom, constants);
    preds.emplace(f.atom.predicate, f.atom.arity());
  }
  for (const auto& r : p.rules) {
    collect_constants(r.head, constants);
    std::vector<const Atom*> atoms;
    collect_atoms(r.body, atoms);
    for (const auto* a : atoms) collect_constants(*a, constants);
    preds.emplace(r.head.predicate, r.head.arity());
    collect_predicates(r.body, preds);
  }
  constants.insert(options.extra_constants.begin(), options.extra_constants.end());
  if (constants.empty()) constants.insert("a");
  gp.universe_.assign(constants.begin(), constants.end());
  gp.predicates_.assign(preds.begin(), preds.end());

  std::size_t budget = options.max_instances;
  auto charge = [&](std::size_t vars) {
    std::size_t n = saturating_pow(gp.universe_.size(), vars);
    if (n > budget) {
      throw ResourceError("grounding needs more than " + std::to_string(options.max_instances) + " instances");
    }
    budget -= n;
  };

  for (const auto& f : p.facts) {
    auto vars = variables_of(f.atom);
    charge(vars.size());
    for_each_grounding(vars, gp.universe_, [&](const Substitution& g) {
      gp.facts_.push_back({gp.intern(g.apply(f.atom)), f.tv});
    });
  }

  for (const auto& r : p.rules) {
    auto vars = variables_of(r.head);
    collect_variables(r.body, vars);
    charge(vars.size());
    for_each_grounding(vars, gp.universe_, [&](const Substitution& g) {
      auto lower = [&](auto& self, const Body& b) -> GroundBody {
        GroundBody out;
        switch (b.kind) {
          case Body::Kind::Atom:
            out.kind = GroundBody::Kind::Atom;
            out.atom = gp.intern(g.apply(b.atom));
            return out;
          case Body::Kind::ConjG: out.kind = GroundBody::Kind::ConjG; break;
          case Body::Kind::ConjL: out.kind = GroundBody::Kind::ConjL; break;
          case Body::Kind::Disj: out.kind = GroundBody::Kind::Disj; break;
          case Body::Kind::Hedge:
            out.kind = GroundBody::Kind::Hedge;
            out.hedge = b.hedge;
            break;
        }
        for (const auto& c : b.children) out.children.push_back(self(self, c));
        return out;
      };
      GroundRule gr;
      gr.head = gp.intern(g.apply(r.head));
      gr.implication = r.implication;
      gr.body = lower(lower, r.body);
      gr.tv = r.tv;
      gp.rules_.push_back(std::move(gr));
    });
  }
  return gp;
}

void Interpretation::set(AtomId id, Degree v) {
  if (id >= values_.size()) values_.resize(id + 1);
  values_[id] = v;
}

bool Interpretation::leq(const Interpretation& other) const {
  std::size_t n = std::max(size(), other.size());
  for (AtomId i = 0; i < n; ++i) {
    if ((*this)[i] > other[i]) return false;
  }
  return true;
}

bool operator==(const Interpretation& a, const Interpretation& b) { return a.leq(b) && b.leq(a); }

Degree eval_ground_body(const GroundBody& body, const Interpretation& f, const InverseMappingTable& table) {
  switch (body.kind) {
    case GroundBody::Kind::Atom: return f[body.atom];
    case GroundBody::Kind::Hedge: return table.apply(body.hedge, eval_ground_body(body.children.at(0), f, table));
    default: break;
  }
  std::vector<Degree> parts;
  parts.reserve(body.children.size());
  for (const auto& c : body.children) parts.push_back(eval_ground_body(c, f, table));
  Connective c = body.kind == GroundBody::Kind::ConjG ? Connective::ConjG
                 : body.kind == GroundBody::Kind::ConjL ? Connective::ConjL
                                                        : Connective::Disj;
  return combine(c, parts, table.domain().top());
}

namespace {

Degree fire(const GroundRule& r, const Interpretation& f, const InverseMappingTable& table) {
  return t_norm(r.implication, eval_ground_body(r.body, f, table), r.tv, table.domain().top());
}

void body_atoms(const GroundBody& b, std::vector<AtomId>& out) {
  if (b.kind == GroundBody::Kind::Atom) {
    out.push_back(b.atom);
    return;
  }
  for (const auto& c : b.children) body_atoms(c, out);
}

}  // namespace

Interpretation tp_apply(const GroundProgram& gp, const Interpretation& f) {
  const auto& table = *gp.truth();
  Interpretation out(gp.atom_count());
  for (const auto& fact : gp.facts()) out.set(fact.atom, std::max(out[fact.atom], fact.tv));
  for (const auto& r : gp.rules()) out.set(r.head, std::max(out[r.head], fire(r, f, table)));
  return out;
}

std::size_t iteration_bound(const GroundProgram& gp) {
  std::size_t base = gp.base_size();
  std::size_t dom = gp.truth()->domain().size();
  if (base != 0 && base > std::numeric_limits<std::size_t>::max() / dom) return std::numeric_limits<std::size_t>::max();
  return std::max<std::size_t>(1, base * dom);
}

LeastModel least_model(const GroundProgram& gp, FixpointMode mode) {
  const std::size_t limit = iteration_bound(gp);
  const auto& table = *gp.truth();
  LeastModel lm;
  lm.model = Interpretation(gp.atom_count());

  if (mode == FixpointMode::Naive) {
    for (;;) {
      if (++lm.iterations > limit) throw Error("least-model iteration exceeded its bound");
      Interpretation next = tp_apply(gp, lm.model);
      if (next == lm.model) return lm;
      lm.model = std::move(next);
    }
  }

  const auto& rules = gp.rules();
  std::vector<Degree> fact_max(gp.atom_count());
  for (const auto& fact : gp.facts()) fact_max[fact.atom] = std::max(fact_max[fact.atom], fact.tv);
  std::vector<std::vector<std::size_t>> readers(gp.atom_count());
  std::vector<std::vector<std::size_t>> by_head(gp.atom_count());
  for (std::size_t i = 0; i < rules.size(); ++i) {
    std::vector<AtomId> atoms;
    body_atoms(rules[i].body, atoms);
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    for (auto a : atoms) readers[a].push_back(i);
    by_head[rules[i].head].push_back(i);
  }

  std::vector<Degree> fired(rules.size());
  std::vector<std::size_t> dirty_rules(rules.size());
  for (std::size_t i = 0; i < rules.size(); ++i) dirty_rules[i] = i;
  bool first = true;
  for (;;) {
    if (++lm.iterations > limit) throw Error("least-model iteration exceeded its bound");
    std::set<AtomId> heads;
    for (auto i : dirty_rules) {
      fired[i] = fire(rules[i], lm.model, table);
      heads.insert(rules[i].head);
    }
    if (first) {
      for (AtomId a = 0; a < gp.atom_count(); ++a) heads.insert(a);
      first = false;
    }
    std::vector<std::pair<AtomId, Degree>> changes;
    for (auto h : heads) {
      Degree v = fact_max[h];
      for (auto i : by_head[h]) v = std::max(v, fired[i]);
      if (v != lm.model[h]) changes.emplace_back(h, v);
    }
    if (changes.empty()) return lm;
    std::set<std::size_t> next;
    for (auto [a, v] : changes) {
      lm.model.set(a, v);
      next.insert(readers[a].begin(), readers[a].end());
    }
    dirty_rules.assign(next.begin(), next.end());
  }
}

std::vector<ModelAnswer> query_model(const GroundProgram& gp, const Interpretation& model, const Atom& query,
                                     bool include_zero) {
  std::vector<ModelAnswer> out;
  auto known = std::find(gp.predicates().begin(), gp.predicates().end(),
                         std::make_pair(query.predicate, query.arity()));
  if (known == gp.predicates().end()) return out;
  auto vars = variables_of(query);
  for_each_grounding(vars, gp.universe(), [&](const Substitution& g) {
    Atom a = g.apply(query);
    auto id = gp.find(a);
    Degree v = id ? model[*id] : Degree{0};
    if (v.index == 0 && !include_zero) return;
    out.push_back({g, std::move(a), v});
  });
  return out;
}

std::string dump_model(const GroundProgram& gp, const Interpretation& model) {
  const auto& domain = gp.truth()->domain();
  std::vector<std::string> lines;
  for (AtomId i = 0; i < gp.atom_count(); ++i) {
    if (model[i].index == 0) continue;
    lines.push_back(format_atom(gp.atom(i)) + " : " + domain.format(model[i]));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace fllp
