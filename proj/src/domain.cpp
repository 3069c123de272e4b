#include "fllp/domain.hpp"

#include <algorithm>

#include "fllp/error.hpp"

namespace fllp {

namespace {

void grow(const HedgeAlgebra& a, Primary primary, std::vector<HedgeId>& prefix, std::vector<TruthValue>& out) {
  out.push_back(TruthValue::term(prefix, primary));
  if (prefix.size() >= static_cast<std::size_t>(a.limit())) return;
  for (std::size_t h = 0; h < a.hedge_count(); ++h) {
    prefix.insert(prefix.begin(), HedgeId{static_cast<std::uint16_t>(h)});
    grow(a, primary, prefix, out);
    prefix.erase(prefix.begin());
  }
}

}  // namespace

std::shared_ptr<const TruthDomain> TruthDomain::enumerate(std::shared_ptr<const HedgeAlgebra> algebra) {
  if (!algebra) throw Error("no algebra given");
  auto d = std::shared_ptr<TruthDomain>(new TruthDomain());
  d->algebra_ = std::move(algebra);
  const auto& a = *d->algebra_;

  auto& vs = d->values_;
  vs.push_back(TruthValue::bottom());
  vs.push_back(TruthValue::middle());
  vs.push_back(TruthValue::top());
  std::vector<HedgeId> prefix;
  grow(a, Primary::Negative, prefix, vs);
  grow(a, Primary::Positive, prefix, vs);
  std::sort(vs.begin(), vs.end(), [&](const TruthValue& x, const TruthValue& y) { return a.compare(x, y) < 0; });

  for (std::uint32_t i = 0; i < vs.size(); ++i) {
    d->lookup_.emplace(vs[i], Degree{i});
    if (vs[i].kind() == TruthValue::Kind::Middle) d->middle_ = Degree{i};
  }
  return d;
}

const TruthValue& TruthDomain::value(Degree d) const {
  if (!contains(d)) throw Error("degree v" + std::to_string(d.index) + " is outside the domain");
  return values_[d.index];
}

std::optional<Degree> TruthDomain::index_of(const TruthValue& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Degree TruthDomain::negate(Degree d) const {
  if (!contains(d)) throw Error("degree v" + std::to_string(d.index) + " is outside the domain");
  return Degree{top().index - d.index};
}

std::string TruthDomain::name(Degree d) const { return algebra_->format(value(d)); }

std::string TruthDomain::format(Degree d) const { return name(d) + " (v" + std::to_string(d.index) + ")"; }

Degree TruthDomain::parse(std::string_view literal) const {
  auto v = algebra_->parse_value(literal);
  if (auto d = index_of(v)) return *d;
  throw Error("'" + std::string(literal) + "' is not in the truth domain");
}

}  // namespace fllp
