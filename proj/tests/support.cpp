#include "support.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fllp/error.hpp"

namespace fllp::testing {

const TruthTables& tables() {
  static const TruthTables t = default_truth();
  return t;
}

const TruthDomain& domain() { return tables()->domain(); }

HedgeId hedge(std::string_view name) { return tables()->algebra().require_hedge(name); }

TruthValue letters(std::string_view text) {
  if (text == "0") return TruthValue::bottom();
  if (text == "W") return TruthValue::middle();
  if (text == "1") return TruthValue::top();
  if (text.size() < 2 || text.substr(text.size() - 2, 1) != "c") throw Error("bad notation: " + std::string(text));
  Primary primary = text.back() == '+' ? Primary::Positive : Primary::Negative;
  std::vector<HedgeId> hs;
  for (char c : text.substr(0, text.size() - 2)) {
    switch (c) {
      case 'V': hs.push_back(hedge("very")); break;
      case 'M': hs.push_back(hedge("more")); break;
      case 'P': hs.push_back(hedge("probably")); break;
      case 'L': hs.push_back(hedge("little")); break;
      default: throw Error("bad hedge letter in " + std::string(text));
    }
  }
  return TruthValue::term(std::move(hs), primary);
}

Degree at(std::string_view text) {
  auto d = domain().index_of(letters(text));
  if (!d) throw Error("not in the domain: " + std::string(text));
  return *d;
}

Degree lit(std::string_view literal) { return domain().parse(literal); }

Program parse(std::string_view text) { return parse_program(text, tables()); }

namespace {

struct Pred {
  std::string name;
  std::size_t arity;
};

class Generator {
 public:
  explicit Generator(std::mt19937& rng) : rng_(rng) {}

  std::string program() {
    consts_.assign({"a", "b", "c"});
    consts_.resize(pick(1, 3));
    const char* names[] = {"p", "q", "r", "s"};
    preds_.clear();
    for (int i = 0, n = pick(1, 4); i < n; ++i) preds_.push_back({names[i], static_cast<std::size_t>(pick(0, 2))});
    // Half of the programs are layered: rule bodies only use predicates
    // listed after the head's, which rules out recursion.
    layered_ = chance(50);
    std::string out;
    for (int i = 0, n = pick(1, 6); i < n; ++i) {
      bool can_rule = !layered_ || preds_.size() > 1;
      out += chance(45) || !can_rule ? fact() : rule();
    }
    return out;
  }

  const std::vector<Pred>& preds() const { return preds_; }
  const std::vector<std::string>& consts() const { return consts_; }
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(int percent) { return pick(1, 100) <= percent; }

 private:
  std::string tv() { return domain().name(Degree{static_cast<std::uint32_t>(pick(1, 44))}); }
  const Pred& pred(int from = 0, int to = -1) {
    if (to < 0) to = static_cast<int>(preds_.size()) - 1;
    return preds_[static_cast<std::size_t>(pick(from, to))];
  }
  const std::string& constant() { return consts_[static_cast<std::size_t>(pick(0, static_cast<int>(consts_.size()) - 1))]; }

  std::string atom(const Pred& p, int var_percent) {
    if (p.arity == 0) return p.name;
    std::string out = p.name + "(";
    for (std::size_t i = 0; i < p.arity; ++i) {
      if (i > 0) out += ", ";
      out += chance(var_percent) ? std::string(1, "XYZ"[pick(0, 2)]) : constant();
    }
    return out + ")";
  }

  std::string fact() { return atom(pred(), 0) + " : " + tv() + ".\n"; }

  std::string body(int depth, int from) {
    if (depth == 0 || chance(45)) return atom(pred(from), 70);
    if (chance(30)) {
      const char* hs[] = {"very", "more", "probably", "little"};
      return std::string("#") + hs[pick(0, 3)] + "(" + body(depth - 1, from) + ")";
    }
    const char* cs[] = {"and_g", "and_l", "or"};
    std::string out = std::string(cs[pick(0, 2)]) + "(";
    for (int i = 0, n = pick(2, 3); i < n; ++i) out += (i > 0 ? ", " : "") + body(depth - 1, from);
    return out + ")";
  }

  std::string rule() {
    int last = static_cast<int>(preds_.size()) - 1;
    int head = layered_ ? pick(0, last - 1) : pick(0, last);
    return atom(preds_[static_cast<std::size_t>(head)], 80) + (chance(50) ? " <-g " : " <-l ") +
           body(2, layered_ ? head + 1 : 0) + " : " + tv() + ".\n";
  }

  std::mt19937& rng_;
  std::vector<std::string> consts_;
  std::vector<Pred> preds_;
  bool layered_ = false;
};

}  // namespace

RandomProgram random_program(std::mt19937& rng) {
  Generator g(rng);
  for (;;) {
    RandomProgram rp;
    rp.text = g.program();
    rp.program = parse(rp.text);
    if (!validate_program(rp.program).empty()) continue;
    rp.recursive = is_recursive(rp.program);
    for (const auto& p : g.preds()) {
      Atom open{p.name, {}};
      Atom mixed{p.name, {}};
      for (std::size_t i = 0; i < p.arity; ++i) {
        open.args.push_back(Term::variable("Q" + std::to_string(i)));
        mixed.args.push_back(g.chance(50) ? Term::variable("Q" + std::to_string(i))
                                          : Term::constant(g.consts()[static_cast<std::size_t>(
                                                g.pick(0, static_cast<int>(g.consts().size()) - 1))]));
      }
      rp.queries.push_back(open);
      if (!(mixed == open)) rp.queries.push_back(mixed);
    }
    return rp;
  }
}

bool is_recursive(const Program& p) {
  std::map<std::string, std::set<std::string>> deps;
  for (const auto& r : p.rules) {
    std::vector<const Atom*> atoms;
    collect_atoms(r.body, atoms);
    for (const auto* a : atoms) deps[r.head.predicate].insert(a->predicate);
  }
  // Depth-first search for a cycle.
  std::map<std::string, int> state;
  std::function<bool(const std::string&)> cyclic = [&](const std::string& n) {
    if (state[n] == 1) return true;
    if (state[n] == 2) return false;
    state[n] = 1;
    for (const auto& m : deps[n]) {
      if (cyclic(m)) return true;
    }
    state[n] = 2;
    return false;
  };
  for (const auto& [n, _] : deps) {
    if (cyclic(n)) return true;
  }
  return false;
}

std::string canonical(const Substitution& s, const std::vector<Term>& query_vars) {
  std::map<Term, std::string> fresh;
  std::string out;
  for (const auto& v : query_vars) {
    Term t = s.apply(v);
    std::string text;
    if (t.is_variable()) {
      auto [it, added] = fresh.emplace(t, "_G" + std::to_string(fresh.size()));
      text = it->second;
    } else {
      text = t.name;
    }
    out += (out.empty() ? "" : ", ") + v.name + "=" + text;
  }
  return out;
}

namespace {

std::string without_space(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

}  // namespace

bool contains_clauses_in_order(const std::string& actual, const std::string& expected) {
  std::string hay = without_space(actual);
  std::string want = without_space(expected);
  std::size_t from = 0;
  for (std::size_t start = 0; start < want.size();) {
    std::size_t end = want.find(").", start);
    std::size_t stop = end == std::string::npos ? want.size() : end + 2;
    std::size_t at = hay.find(want.substr(start, stop - start), from);
    if (at == std::string::npos) return false;
    from = at + (stop - start);
    start = stop;
  }
  return true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ControlSystem random_control(std::mt19937& rng, bool unit_confidence) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto degree = [&](int lo) { return Degree{static_cast<std::uint32_t>(pick(lo, 44))}; };
  ControlSystem cs;
  cs.truth = tables();
  for (int i = 0, n = pick(1, 5); i < n; ++i) cs.inputs.push_back("x" + std::to_string(i));
  for (int i = 0, n = pick(1, 5); i < n; ++i) cs.outputs.push_back("y" + std::to_string(i));
  const char* in_preds[] = {"low", "mid", "high"};
  const char* out_preds[] = {"weak", "strong"};
  auto label = [&](const char* name) {
    ControlLabel l;
    l.predicate = name;
    for (int k = 0, n = pick(0, 2); k < n; ++k) l.hedges.push_back(HedgeId{static_cast<std::uint16_t>(pick(0, 3))});
    return l;
  };
  for (int i = 0, n = pick(1, 4); i < n; ++i) {
    ControlRule r{label(in_preds[pick(0, 2)]), label(out_preds[pick(0, 1)]), std::nullopt};
    if (!unit_confidence && pick(0, 1)) r.confidence = degree(1);
    cs.rules.push_back(r);
  }
  for (const char* p : in_preds) {
    for (const auto& x : cs.inputs) cs.sat[p][x] = degree(0);
  }
  for (const char* p : out_preds) {
    for (const auto& y : cs.outputs) cs.sat[p][y] = degree(0);
  }
  return cs;
}

}  // namespace fllp::testing
