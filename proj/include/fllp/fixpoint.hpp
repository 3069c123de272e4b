#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fllp/ast.hpp"
#include "fllp/solver.hpp"

namespace fllp {

using AtomId = std::uint32_t;

/// A body formula whose leaves are interned ground atoms.
struct GroundBody {
  enum class Kind : std::uint8_t { Atom, ConjG, ConjL, Disj, Hedge };

  Kind kind = Kind::Atom;
  AtomId atom = 0;
  HedgeId hedge;
  std::vector<GroundBody> children;
};

struct GroundRule {
  AtomId head = 0;
  Implication implication = Implication::Godel;
  GroundBody body;
  Degree tv;
};

struct GroundFact {
  AtomId atom = 0;
  Degree tv;
};

struct GroundOptions {
  /// Maximum number of ground rule and fact instances.
  std::size_t max_instances = 1'000'000;
  /// Constants added to the universe, e.g. those of a query.
  std::vector<std::string> extra_constants;
};

class GroundProgram {
 public:
  const TruthTables& truth() const noexcept { return truth_; }
  /// Constants of the program, sorted; `a` when the program has none.
  const std::vector<std::string>& universe() const noexcept { return universe_; }
  /// Predicate name and arity of every predicate in the program.
  const std::vector<std::pair<std::string, std::size_t>>& predicates() const noexcept { return predicates_; }

  std::size_t atom_count() const noexcept { return atoms_.size(); }
  const Atom& atom(AtomId id) const { return atoms_.at(id); }
  std::optional<AtomId> find(const Atom& ground) const;

  const std::vector<GroundRule>& rules() const noexcept { return rules_; }
  const std::vector<GroundFact>& facts() const noexcept { return facts_; }

  /// |B_P|: every ground atom over the universe for the program's predicates.
  std::size_t base_size() const;

 private:
  friend GroundProgram ground(const Program&, const GroundOptions&);

  AtomId intern(const Atom& a);

  TruthTables truth_;
  std::vector<std::string> universe_;
  std::vector<std::pair<std::string, std::size_t>> predicates_;
  std::vector<Atom> atoms_;
  std::map<Atom, AtomId> ids_;
  std::vector<GroundRule> rules_;
  std::vector<GroundFact> facts_;
};

/// All ground instances over the Herbrand universe. Throws ResourceError past the cap.
GroundProgram ground(const Program& program, const GroundOptions& options = {});

/// Truth values of ground atoms; atoms not listed are absfalse.
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(std::size_t atoms) : values_(atoms) {}

  Degree operator[](AtomId id) const { return id < values_.size() ? values_[id] : Degree{0}; }
  void set(AtomId id, Degree v);
  std::size_t size() const noexcept { return values_.size(); }

  /// Pointwise order.
  bool leq(const Interpretation& other) const;

  friend bool operator==(const Interpretation& a, const Interpretation& b);

 private:
  std::vector<Degree> values_;
};

Degree eval_ground_body(const GroundBody& body, const Interpretation& f, const InverseMappingTable& table);

/// One round of the immediate consequences operator.
Interpretation tp_apply(const GroundProgram& gp, const Interpretation& f);

enum class FixpointMode : std::uint8_t {
  Naive,
  /// Re-evaluates only rules whose body atoms changed in the previous round.
  Delta,
};

struct LeastModel {
  Interpretation model;
  /// Rounds until T_P(f) = f, counting the final round that confirms it.
  std::size_t iterations = 0;
};

/// Iterates T_P from the bottom interpretation. Throws Error if the
/// iteration bound |B_P|·|domain| is exceeded.
LeastModel least_model(const GroundProgram& gp, FixpointMode mode = FixpointMode::Naive);

std::size_t iteration_bound(const GroundProgram& gp);

struct ModelAnswer {
  Substitution bindings;
  Atom atom;
  Degree tv;
};

/// Every grounding of `query` over the universe with its model value.
/// Absfalse answers are dropped unless `include_zero` is set.
std::vector<ModelAnswer> query_model(const GroundProgram& gp, const Interpretation& model, const Atom& query,
                                     bool include_zero = false);

/// `<atom> : <literal> (v<i>)` per atom above absfalse, sorted.
std::string dump_model(const GroundProgram& gp, const Interpretation& model);

}  // namespace fllp
