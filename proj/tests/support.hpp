#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fllp/control.hpp"
#include "fllp/parser.hpp"
#include "fllp/solver.hpp"

namespace fllp::testing {

const TruthTables& tables();
const TruthDomain& domain();
HedgeId hedge(std::string_view name);

// Short notation for the default algebra: "0", "W", "1", or hedge letters
// (V, M, P, L) followed by "c+" or "c-", outermost hedge first.
TruthValue letters(std::string_view text);
Degree at(std::string_view text);

// Index of a value by its spelled-out literal, e.g. "very more true".
Degree lit(std::string_view literal);

Program parse(std::string_view text);

struct RandomProgram {
  std::string text;
  Program program;
  bool recursive = false;
  std::vector<Atom> queries;
};

// At most 4 predicates of arity at most 2, at most 3 constants and at most 6
// statements. The program always passes validation.
RandomProgram random_program(std::mt19937& rng);

bool is_recursive(const Program& p);

// Substitution text with unbound variables renamed in order of appearance,
// so answers from different searches can be compared.
std::string canonical(const Substitution& s, const std::vector<Term>& query_vars);

// Whether every clause of `expected` (split after each ")." once whitespace
// is removed) occurs in `actual` in the same order.
bool contains_clauses_in_order(const std::string& actual, const std::string& expected);

std::string read_file(const std::string& path);

// |X|, |Y| at most 5 and at most 4 rules.
ControlSystem random_control(std::mt19937& rng, bool unit_confidence);

}  // namespace fllp::testing
