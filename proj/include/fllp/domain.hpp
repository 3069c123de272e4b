#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fllp/algebra.hpp"

namespace fllp {

/// Position of a truth value in the enumerated domain, v0 (absfalse) to vn (abstrue).
struct Degree {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Degree, Degree) = default;
};

/// The finite chain of every value of a limited hedge algebra, ascending.
class TruthDomain {
 public:
  static std::shared_ptr<const TruthDomain> enumerate(std::shared_ptr<const HedgeAlgebra> algebra);

  const HedgeAlgebra& algebra() const noexcept { return *algebra_; }
  const std::shared_ptr<const HedgeAlgebra>& algebra_ptr() const noexcept { return algebra_; }

  std::size_t size() const noexcept { return values_.size(); }
  Degree bottom() const noexcept { return Degree{0}; }
  Degree top() const noexcept { return Degree{static_cast<std::uint32_t>(values_.size() - 1)}; }
  Degree middle() const noexcept { return middle_; }
  bool contains(Degree d) const noexcept { return d.index < values_.size(); }

  std::span<const TruthValue> values() const noexcept { return values_; }
  const TruthValue& value(Degree d) const;
  std::optional<Degree> index_of(const TruthValue& v) const;

  Degree negate(Degree d) const;

  /// `little probably true`
  std::string name(Degree d) const;
  /// `little probably true (v28)`
  std::string format(Degree d) const;
  /// Accepts a literal such as `very true` or `middle`; throws Error otherwise.
  Degree parse(std::string_view literal) const;

 private:
  TruthDomain() = default;

  std::shared_ptr<const HedgeAlgebra> algebra_;
  std::vector<TruthValue> values_;
  std::map<TruthValue, Degree> lookup_;
  Degree middle_;
};

}  // namespace fllp
