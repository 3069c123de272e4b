#include "fllp/connectives.hpp"

#include <algorithm>

#include "fllp/ast.hpp"
#include "fllp/error.hpp"

namespace fllp {

Degree t_norm(Implication kind, Degree a, Degree b, Degree top) {
  if (kind == Implication::Godel) return std::min(a, b);
  std::int64_t sum = std::int64_t{a.index} + b.index - top.index;
  return Degree{static_cast<std::uint32_t>(std::max<std::int64_t>(sum, 0))};
}

Degree implicator(Implication kind, Degree head, Degree body, Degree top) {
  if (body <= head) return top;
  if (kind == Implication::Godel) return head;
  return Degree{top.index + head.index - body.index};
}

Degree combine(Connective c, std::span<const Degree> values, Degree top) {
  Degree acc = c == Connective::Disj ? Degree{0} : top;
  for (Degree v : values) {
    switch (c) {
      case Connective::ConjG: acc = std::min(acc, v); break;
      case Connective::ConjL: acc = t_norm(Implication::Lukasiewicz, acc, v, top); break;
      case Connective::Disj: acc = std::max(acc, v); break;
    }
  }
  return acc;
}

const char* implication_name(Implication kind) { return kind == Implication::Godel ? "G" : "L"; }

const char* connective_name(Connective c) {
  switch (c) {
    case Connective::ConjG: return "and_g";
    case Connective::ConjL: return "and_l";
    case Connective::Disj: return "or";
  }
  return "?";
}

Degree eval_ground_body(const Body& body, const Valuation& valuation, const InverseMappingTable& table) {
  switch (body.kind) {
    case Body::Kind::Atom: {
      if (auto v = valuation(body.atom)) return *v;
      throw Error("no truth value for atom " + format_atom(body.atom));
    }
    case Body::Kind::Hedge:
      return table.apply(body.hedge, eval_ground_body(body.children.at(0), valuation, table));
    default: {
      std::vector<Degree> parts;
      parts.reserve(body.children.size());
      for (const auto& c : body.children) parts.push_back(eval_ground_body(c, valuation, table));
      return combine(*body.connective(), parts, table.domain().top());
    }
  }
}

}  // namespace fllp
