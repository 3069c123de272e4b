#pragma once

#include <string>

#include "fllp/ast.hpp"

namespace fllp {

/// Clause text for a standard Prolog system: truth-function clauses, the
/// inv_map/3 table, then one clause per rule and fact. Truth values become
/// domain indices carried in an extra final argument.
std::string compile_program(const Program& program);

/// Only the translated rules and facts, without the preamble.
std::string compile_clauses(const Program& program);

/// `?- p(X,Truth_value).`
std::string compile_query(const Atom& query);

}  // namespace fllp
