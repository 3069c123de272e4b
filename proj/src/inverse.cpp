#include "fllp/inverse.hpp"

#include <algorithm>

#include "fllp/algebra_config.hpp"
#include "fllp/error.hpp"

namespace fllp {

namespace {

class Builder {
 public:
  explicit Builder(const TruthDomain& d) : d_(d), a_(d.algebra()), p_(a_.positive_count()), q_(a_.negative_count()) {}

  // h_r⁻ on the positive side, before clamping.
  TruthValue positive_side(int r, const TruthValue& x) const {
    const auto& hs = x.hedges();
    if (hs.empty()) return shifted({}, -r);
    int s = a_.extended_index(hs.back());
    if (r == s) return c_plus();
    int d = s - r;
    if (d < -q_) return TruthValue::middle();
    if (d > p_) return TruthValue::top();
    std::vector<HedgeId> sigma(hs.begin(), hs.end() - 1);
    if (direction({hs.back()}) != direction({*a_.hedge_at(d)}) && !sigma.empty()) {
      int t = a_.extended_index(sigma.back());
      sigma = {*a_.hedge_at(std::clamp(-t, -q_, p_))};
    }
    sigma.push_back(*a_.hedge_at(d));
    return TruthValue::term(std::move(sigma), Primary::Positive);
  }

  Degree apply(int r, Degree xd) const {
    const TruthValue& x = d_.value(xd);
    if (!x.is_term()) return xd;
    if (x.primary() == Primary::Positive) {
      auto v = positive_side(r, x);
      if (v.kind() == TruthValue::Kind::Middle) return Degree{d_.middle().index + 1};
      if (v.kind() == TruthValue::Kind::Top) return Degree{d_.top().index - 1};
      return *d_.index_of(v);
    }
    // Negative side mirrors the positive side: h_r⁻(x) = -(h_{-r})⁻(-x).
    int mirrored = std::clamp(-r, -q_, p_);
    auto v = positive_side(mirrored, a_.negate(x));
    if (v.kind() == TruthValue::Kind::Middle) return Degree{d_.middle().index - 1};
    if (v.kind() == TruthValue::Kind::Top) return Degree{1};
    return *d_.index_of(a_.negate(v));
  }

 private:
  static TruthValue c_plus() { return TruthValue::term({}, Primary::Positive); }

  TruthValue shifted(std::vector<HedgeId> sigma, int e) const {
    if (e < -q_) return TruthValue::middle();
    if (e > p_) return TruthValue::top();
    if (e != 0) sigma.push_back(*a_.hedge_at(e));
    return TruthValue::term(std::move(sigma), Primary::Positive);
  }

  // +1 when hedges ascending in <=_e raise k c+, -1 when they lower it.
  int direction(std::vector<HedgeId> k) const {
    k.insert(k.begin(), *a_.hedge_at(p_));
    return a_.sign(k, Primary::Positive);
  }

  const TruthDomain& d_;
  const HedgeAlgebra& a_;
  int p_;
  int q_;
};

}  // namespace

std::shared_ptr<const InverseMappingTable> InverseMappingTable::construct(std::shared_ptr<const TruthDomain> domain) {
  if (!domain) throw Error("no truth domain given");
  auto t = std::shared_ptr<InverseMappingTable>(new InverseMappingTable());
  t->domain_ = std::move(domain);
  const auto& a = t->algebra();
  Builder b(*t->domain_);
  t->table_.resize(a.hedge_count());
  for (std::size_t h = 0; h < a.hedge_count(); ++h) {
    int r = a.extended_index(HedgeId{static_cast<std::uint16_t>(h)});
    auto& row = t->table_[h];
    row.reserve(t->domain_->size());
    for (std::uint32_t i = 0; i < t->domain_->size(); ++i) row.push_back(b.apply(r, Degree{i}));
  }
  return t;
}

std::shared_ptr<const InverseMappingTable> InverseMappingTable::build(std::shared_ptr<const TruthDomain> domain) {
  auto base = construct(std::move(domain));
  const auto& overrides = base->algebra().spec().inverse_overrides;
  if (overrides.empty()) {
    auto problems = base->validate();
    if (!problems.empty()) throw AlgebraError(std::move(problems));
    return base;
  }
  auto t = std::shared_ptr<InverseMappingTable>(new InverseMappingTable(*base));
  std::vector<std::string> errors;
  for (const auto& o : overrides) {
    std::string at = o.line > 0 ? "line " + std::to_string(o.line) + ": " : "";
    try {
      auto h = t->algebra().require_hedge(o.hedge);
      auto x = t->domain().parse(o.argument);
      auto v = t->domain().parse(o.value);
      t->table_[h.value][x.index] = v;
    } catch (const Error& e) {
      errors.push_back(at + e.what());
    }
  }
  if (errors.empty()) errors = t->validate();
  if (!errors.empty()) throw AlgebraError(std::move(errors));
  return t;
}

Degree InverseMappingTable::apply(std::optional<HedgeId> h, Degree x) const {
  if (!domain_->contains(x)) throw Error("degree v" + std::to_string(x.index) + " is outside the domain");
  if (!h) return x;
  if (h->value >= table_.size()) throw Error("undeclared hedge id " + std::to_string(h->value));
  return table_[h->value][x.index];
}

TruthValue InverseMappingTable::apply(std::optional<HedgeId> h, const TruthValue& x) const {
  auto d = domain_->index_of(x);
  if (!d) throw Error("'" + algebra().format(x) + "' is not in the truth domain");
  return domain_->value(apply(h, *d));
}

std::vector<std::string> InverseMappingTable::validate() const {
  std::vector<std::string> out;
  const auto& a = algebra();
  const auto& d = *domain_;
  auto name = [&](std::optional<HedgeId> h) { return h ? a.hedge(*h).name : std::string("I"); };
  auto val = [&](Degree x) { return d.name(x); };

  std::vector<std::optional<HedgeId>> hedges{std::nullopt};
  for (std::size_t h = 0; h < a.hedge_count(); ++h) hedges.push_back(HedgeId{static_cast<std::uint16_t>(h)});
  auto ext = [&](std::optional<HedgeId> h) { return h ? a.extended_index(*h) : 0; };

  for (std::size_t h = 0; h < a.hedge_count(); ++h) {
    HedgeId id{static_cast<std::uint16_t>(h)};
    if (a.limit() >= 1) {
      auto hc = *d.index_of(TruthValue::term({id}, Primary::Positive));
      auto c = *d.index_of(TruthValue::term({}, Primary::Positive));
      if (apply(id, hc) != c) out.push_back(name(id) + "⁻(" + val(hc) + ") must be " + val(c));
    }
    for (Degree fixed : {d.bottom(), d.middle(), d.top()}) {
      if (apply(id, fixed) != fixed) out.push_back(name(id) + "⁻ must fix " + val(fixed));
    }
    for (std::uint32_t i = 0; i < d.size(); ++i) {
      Degree x{i};
      Degree y = apply(id, x);
      if (i + 1 < d.size() && apply(id, Degree{i + 1}) < y) {
        out.push_back(name(id) + "⁻ is not monotone at " + val(x) + " < " + val(Degree{i + 1}));
      }
      const auto& xv = d.value(x);
      if (xv.is_term()) {
        bool pos = xv.primary() == Primary::Positive;
        bool ok = pos ? y > d.middle() || y == d.middle() : y < d.middle() || y == d.middle();
        if (!ok) out.push_back(name(id) + "⁻(" + val(x) + ") = " + val(y) + " crosses sides");
      }
    }
  }
  for (auto h : hedges) {
    for (auto k : hedges) {
      if (ext(h) >= ext(k)) continue;
      for (std::uint32_t i = 0; i < d.size(); ++i) {
        if (apply(h, Degree{i}) < apply(k, Degree{i})) {
          out.push_back(name(h) + "⁻(" + val(Degree{i}) + ") < " + name(k) + "⁻(" + val(Degree{i}) + ") although " +
                        name(h) + " <e " + name(k));
        }
      }
    }
  }
  return out;
}

TruthTables truth_from_config(std::string_view text) {
  auto algebra = std::make_shared<const HedgeAlgebra>(HedgeAlgebra::build(parse_algebra_config(text)));
  return InverseMappingTable::build(TruthDomain::enumerate(std::move(algebra)));
}

TruthTables truth_from_file(const std::filesystem::path& path) {
  auto algebra = std::make_shared<const HedgeAlgebra>(HedgeAlgebra::build(load_algebra_config(path)));
  return InverseMappingTable::build(TruthDomain::enumerate(std::move(algebra)));
}

TruthTables default_truth() {
  static const TruthTables tables = truth_from_config(default_algebra_config());
  return tables;
}

}  // namespace fllp
