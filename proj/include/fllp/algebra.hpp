#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fllp {

struct HedgeId {
  std::uint16_t value = 0;

  friend constexpr auto operator<=>(HedgeId, HedgeId) = default;
};

/// H+ holds hedges with hc+ > c+ (Very, More); H- those with hc+ < c+ (Probably, Little).
enum class HedgeClass : std::uint8_t { Positive, Negative };

enum class Primary : std::uint8_t { Negative, Positive };

struct HedgeDecl {
  std::string name;
  HedgeClass cls = HedgeClass::Positive;
  /// Strength within the class; a larger rank modifies more.
  int rank = 1;
  /// Short atom used in generated clause text; defaults to `name`.
  std::string symbol;
};

/// "modifier is positive (or negative) w.r.t. target".
struct PositivityEntry {
  std::string modifier;
  std::string target;
  bool positive = true;
  int line = 0;
};

/// A hand-tuned inverse-mapping cell, given as truth literals.
struct InverseOverride {
  std::string hedge;
  std::string argument;
  std::string value;
  int line = 0;
};

struct HedgeAlgebraSpec {
  std::string negative_primary = "false";
  std::string positive_primary = "true";
  std::vector<HedgeDecl> hedges;
  std::vector<PositivityEntry> positivity;
  int limit = 0;
  std::vector<InverseOverride> inverse_overrides;
};

/// A linguistic truth value: 0, W, 1, or a hedge string applied to a primary term.
/// Hedges are stored outermost first, so `very more true` is {very, more} over c+.
class TruthValue {
 public:
  enum class Kind : std::uint8_t { Bottom, Middle, Top, Term };

  static TruthValue bottom() { return TruthValue(Kind::Bottom); }
  static TruthValue middle() { return TruthValue(Kind::Middle); }
  static TruthValue top() { return TruthValue(Kind::Top); }
  static TruthValue term(std::vector<HedgeId> hedges, Primary primary);

  Kind kind() const noexcept { return kind_; }
  bool is_term() const noexcept { return kind_ == Kind::Term; }
  Primary primary() const noexcept { return primary_; }
  const std::vector<HedgeId>& hedges() const noexcept { return hedges_; }
  std::size_t length() const noexcept { return hedges_.size(); }

  // Structural equality and ordering (usable as a map key); the semantic
  // order lives in HedgeAlgebra::compare.
  friend bool operator==(const TruthValue&, const TruthValue&) = default;
  friend auto operator<=>(const TruthValue&, const TruthValue&) = default;

 private:
  explicit TruthValue(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Bottom;
  Primary primary_ = Primary::Positive;
  std::vector<HedgeId> hedges_;
};

enum class ApplyMode : std::uint8_t {
  /// Applying a hedge to a term that already has `limit` hedges leaves it unchanged.
  Clamp,
  /// Applying a hedge past the limit is an error.
  Strict,
};

/// A validated linear symmetric hedge algebra with a length limit.
class HedgeAlgebra {
 public:
  /// Validates `spec`, throwing AlgebraError with every violation found.
  static HedgeAlgebra build(const HedgeAlgebraSpec& spec);

  const HedgeAlgebraSpec& spec() const noexcept { return spec_; }
  int limit() const noexcept { return spec_.limit; }
  const std::string& primary_name(Primary p) const;

  std::size_t hedge_count() const noexcept { return spec_.hedges.size(); }
  const HedgeDecl& hedge(HedgeId h) const;
  std::optional<HedgeId> find_hedge(std::string_view name) const;
  /// Throws Error for an undeclared hedge name.
  HedgeId require_hedge(std::string_view name) const;

  /// |H+| and |H-|.
  int positive_count() const noexcept { return p_; }
  int negative_count() const noexcept { return q_; }

  /// Position in the extended order <=_e: H- are -q..-1 (strongest first),
  /// I is 0, H+ are 1..p (weakest first).
  int extended_index(HedgeId h) const;
  /// Inverse of extended_index; nullopt stands for the identity I.
  std::optional<HedgeId> hedge_at(int extended_index) const;
  /// All hedges ascending under <=_e, identity excluded.
  std::vector<HedgeId> extended_order() const;

  bool is_positive_wrt(HedgeId modifier, HedgeId target) const;

  /// Sign of a term: +1 if its outermost hedge raises the term it modifies,
  /// -1 if it lowers it; primaries report their own side. 0, W, 1 give 0.
  int sign(const TruthValue& v) const;
  /// Same as above for a raw hedge string, which may exceed the limit.
  int sign(std::span<const HedgeId> outer_first, Primary primary) const;

  std::strong_ordering compare(const TruthValue& x, const TruthValue& y) const;

  TruthValue negate(const TruthValue& v) const;
  TruthValue apply_hedge(HedgeId h, const TruthValue& v, ApplyMode mode = ApplyMode::Clamp) const;

  /// Throws Error if `v` mentions an undeclared hedge or exceeds the limit.
  void check(const TruthValue& v) const;

  /// Hedge words then primary, e.g. `very more true`; or absfalse/middle/abstrue.
  std::string format(const TruthValue& v) const;
  TruthValue parse_value(std::string_view literal) const;

 private:
  explicit HedgeAlgebra(HedgeAlgebraSpec spec);

  void check_hedge(HedgeId h) const;

  HedgeAlgebraSpec spec_;
  int p_ = 0;
  int q_ = 0;
  std::vector<int> extended_;             // by hedge id
  std::vector<HedgeId> by_extended_;      // index e + q, identity slot unused
  std::vector<std::uint8_t> positive_;    // modifier * n + target
};

/// Words that cannot be used as hedge or primary names.
bool is_reserved_truth_word(std::string_view word);

}  // namespace fllp
