#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fllp/domain.hpp"

namespace fllp {

/// h⁻ for every hedge h, materialized as index tables over a TruthDomain.
class InverseMappingTable {
 public:
  /// Generic construction followed by the limited-domain clamps, without overrides.
  static std::shared_ptr<const InverseMappingTable> construct(std::shared_ptr<const TruthDomain> domain);

  /// construct() plus the `inverse:` rows of the algebra spec. Throws
  /// AlgebraError if an override is malformed or the merged table is invalid.
  static std::shared_ptr<const InverseMappingTable> build(std::shared_ptr<const TruthDomain> domain);

  const TruthDomain& domain() const noexcept { return *domain_; }
  const std::shared_ptr<const TruthDomain>& domain_ptr() const noexcept { return domain_; }
  const HedgeAlgebra& algebra() const noexcept { return domain_->algebra(); }

  /// nullopt is the identity hedge.
  Degree apply(std::optional<HedgeId> h, Degree x) const;
  TruthValue apply(std::optional<HedgeId> h, const TruthValue& x) const;

  /// Every breach of the inverse-mapping conditions, fixed points and side preservation.
  std::vector<std::string> validate() const;

 private:
  InverseMappingTable() = default;

  std::shared_ptr<const TruthDomain> domain_;
  std::vector<std::vector<Degree>> table_;  // [hedge][degree]
};

using TruthTables = std::shared_ptr<const InverseMappingTable>;

/// Algebra, domain and inverse table from config text.
TruthTables truth_from_config(std::string_view text);
TruthTables truth_from_file(const std::filesystem::path& path);
/// The built-in four-hedge algebra; constructed once and shared.
TruthTables default_truth();

}  // namespace fllp
