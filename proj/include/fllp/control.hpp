#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fllp/ast.hpp"
#include "fllp/fixpoint.hpp"

namespace fllp {

/// A fuzzy predicate label such as `very large`: hedges outermost first, then the predicate.
struct ControlLabel {
  std::vector<HedgeId> hedges;
  std::string predicate;
};

struct ControlRule {
  ControlLabel input;
  ControlLabel output;
  /// Confidence in the rule; abstrue when not given.
  std::optional<Degree> confidence;
};

/// IF x is A THEN y is B rules over finite input and output point sets,
/// with the degree to which each point satisfies each primary predicate.
struct ControlSystem {
  TruthTables truth;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<ControlRule> rules;
  /// predicate -> point -> degree
  std::map<std::string, std::map<std::string, Degree>> sat;
};

/// Sections:
///
///     inputs: r1, r2
///     outputs: t1, t2
///     rule: very large => fast conf very true
///     sat large r1 more true
///
/// Throws ParseError.
ControlSystem parse_control(std::string_view text, TruthTables truth);

/// One Gödel or Łukasiewicz rule `good(X, Y) <- and_g(A(X), B(Y))` per control rule,
/// plus facts for the primary predicates. Throws Error on a missing satisfaction entry.
Program compile_control(const ControlSystem& cs, Implication implication = Implication::Godel);

struct GoodnessSurface {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  /// values[i][j] = degree of good(inputs[i], outputs[j]).
  std::vector<std::vector<Degree>> values;

  /// Index of the best output for input i; the lowest index wins ties.
  std::size_t recommended(std::size_t input) const;
};

/// Reads good(r, t) off T_P applied twice to the bottom interpretation, and
/// throws Error if that is not already the least model.
GoodnessSurface goodness_surface(const ControlSystem& cs, const Program& compiled);

/// Aligned grid of truth literals with a recommendation column.
std::string format_surface(const GoodnessSurface& s, const TruthDomain& domain);

}  // namespace fllp
