#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fllp/ast.hpp"

namespace fllp {

/// Variable bindings kept fully resolved: no bound variable occurs in any
/// binding's value, so applying it once is enough.
class Substitution {
 public:
  bool empty() const noexcept { return bindings_.empty(); }
  const std::map<Term, Term>& bindings() const noexcept { return bindings_; }

  Term apply(const Term& t) const;
  Atom apply(const Atom& a) const;

  /// Binds `var` to `value` (resolved first) and rewrites existing bindings.
  /// Binding a variable to itself is a no-op.
  void bind(const Term& var, const Term& value);

  /// Keeps only bindings for the given variables.
  Substitution restricted(const std::vector<Term>& vars) const;

  friend bool operator==(const Substitution&, const Substitution&) = default;
  friend auto operator<=>(const Substitution&, const Substitution&) = default;

 private:
  std::map<Term, Term> bindings_;
};

std::string format_substitution(const Substitution& s);

/// Most general unifier of two function-free atoms.
std::optional<Substitution> mgu(const Atom& a, const Atom& b);
/// Extends `s` so that a·s and b·s coincide.
bool unify(const Atom& a, const Atom& b, Substitution& s);

/// An expression over atoms, connectives, hedges, inverse mappings,
/// t-norm applications and truth values: the state of a derivation.
struct Word {
  enum class Kind : std::uint8_t { Atom, ConjG, ConjL, Disj, Hedge, Inverse, TNorm, Value };

  Kind kind = Kind::Value;
  fllp::Atom atom;                          // Atom
  HedgeId hedge;                            // Hedge, Inverse
  Implication implication = Implication::Godel;  // TNorm
  Degree value;                             // Value; rule truth value for TNorm
  std::vector<Word> children;

  static Word from_atom(fllp::Atom a);
  static Word from_body(const Body& b);
  static Word constant(Degree d);

  bool has_atoms() const;

  friend bool operator==(const Word&, const Word&) = default;
};

/// Renders a word, e.g. `C_G(and_g(very^-(st_hd(ann)), ...), very more true)`.
std::string format_word(const Word& w, const Substitution& s, const TruthDomain& domain);

/// Evaluates an atom-free word.
Degree evaluate_word(const Word& w, const InverseMappingTable& table);

struct Answer {
  Degree tv;
  /// Bindings of the query variables.
  Substitution subst;
  /// Number of admissible steps in the derivation.
  std::size_t length = 0;
};

struct SolveOptions {
  /// Maximum number of admissible steps per derivation.
  std::size_t depth = 64;
  /// Only answers with at least this value are produced; branches that cannot reach it are cut.
  std::optional<Degree> threshold;
  /// Keep only the best answer for each substitution.
  bool best = false;
  /// Try clauses in declaration order (facts first) instead of the heuristic order.
  bool exhaustive = false;
  /// Bound on the total number of steps explored.
  std::size_t max_steps = 5'000'000;
  std::ostream* trace = nullptr;
};

struct SolveStats {
  std::size_t steps = 0;
  /// Derivations stopped by the depth bound.
  std::size_t exhausted = 0;
  /// Branches cut by the threshold.
  std::size_t pruned = 0;
  /// The step budget ran out before the search finished.
  bool budget_exceeded = false;
};

struct SolveResult {
  std::vector<Answer> answers;
  SolveStats stats;

  bool complete() const noexcept { return stats.exhausted == 0 && !stats.budget_exceeded; }
};

/// Depth-first search over derivations of `query`, selecting the leftmost atom.
SolveResult solve(const Program& program, const Atom& query, const SolveOptions& options = {});

/// Where a threshold is passed down through a goal word.
struct ThresholdContext {
  enum class Kind : std::uint8_t { Rule, Hedge, ConjG, ConjL, Disj };

  Kind kind = Kind::ConjG;
  Implication implication = Implication::Godel;  // Rule
  Degree rule_tv;                                // Rule
  HedgeId hedge;                                 // Hedge
  std::size_t arity = 2;                         // ConjL
  /// Largest value any conjunct can take; ConjL only.
  std::optional<Degree> upper;

  static ThresholdContext rule(Implication i, Degree r) { return {Kind::Rule, i, r, {}, 2, {}}; }
  static ThresholdContext hedged(HedgeId h) { return {Kind::Hedge, Implication::Godel, {}, h, 2, {}}; }
  static ThresholdContext conj_g() { return {Kind::ConjG, Implication::Godel, {}, {}, 2, {}}; }
  static ThresholdContext conj_l(std::size_t arity, std::optional<Degree> upper) {
    return {Kind::ConjL, Implication::Godel, {}, {}, arity, upper};
  }
  static ThresholdContext disj() { return {Kind::Disj, Implication::Godel, {}, {}, 2, {}}; }
};

/// Threshold each sub-goal must meet for the enclosing goal to reach `t`.
/// nullopt means no value can meet it and the branch can be cut.
std::optional<Degree> next_threshold(const InverseMappingTable& table, Degree t, const ThresholdContext& context);

}  // namespace fllp
