#pragma once

#include <functional>
#include <optional>
#include <span>

#include "fllp/domain.hpp"
#include "fllp/inverse.hpp"

namespace fllp {

struct Atom;
struct Body;

/// Selects a t-norm together with its residual implicator.
enum class Implication : std::uint8_t { Godel, Lukasiewicz };

enum class Connective : std::uint8_t { ConjG, ConjL, Disj };

Degree t_norm(Implication kind, Degree a, Degree b, Degree top);

/// Residuum of t_norm: the largest r with t_norm(body, r) <= head.
Degree implicator(Implication kind, Degree head, Degree body, Degree top);

/// N-ary body connective, folded from the left. An empty list yields the unit.
Degree combine(Connective c, std::span<const Degree> values, Degree top);

const char* implication_name(Implication kind);
const char* connective_name(Connective c);

/// Returns nullopt for atoms the valuation does not cover.
using Valuation = std::function<std::optional<Degree>(const Atom&)>;

/// Evaluates a variable-free body formula. Throws Error on atoms outside the valuation.
Degree eval_ground_body(const Body& body, const Valuation& valuation, const InverseMappingTable& table);

}  // namespace fllp
