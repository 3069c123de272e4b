#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fllp/ast.hpp"

namespace fllp {

/// Reads the `use algebra "<path>".` directive without needing an algebra.
/// Throws ParseError if the directive is malformed.
std::optional<std::string> find_algebra_directive(std::string_view text);

/// Grammar, one statement per `.`:
///
///     head <-g body : literal.      % Gödel implication
///     head <-l body : literal.      % Łukasiewicz implication
///     atom : literal.
///
/// Bodies are atoms, `and_g(...)`, `and_l(...)`, `or(...)` with two or more
/// arguments, or `#hedge(body)`. Throws ParseError.
Program parse_program(std::string_view text, TruthTables truth);

/// `?- p(X, a).`; the `?-` prefix and final dot are optional.
Atom parse_query(std::string_view text);

struct Diagnostic {
  SourcePos pos;
  std::string message;
};

struct ValidationOptions {
  /// Require every head variable to occur in the body, and facts to be ground.
  bool safe = false;
};

std::vector<Diagnostic> validate_program(const Program& program, const ValidationOptions& options = {});

std::string format_diagnostic(const Diagnostic& d);

}  // namespace fllp
