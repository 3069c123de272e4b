#include "fllp/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "fllp/error.hpp"

namespace fllp {

namespace {

constexpr std::string_view kReserved[] = {"absfalse", "middle", "abstrue"};

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_';
  });
}

const char* class_name(HedgeClass c) { return c == HedgeClass::Positive ? "H+" : "H-"; }

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

}  // namespace

bool is_reserved_truth_word(std::string_view word) {
  return std::find(std::begin(kReserved), std::end(kReserved), word) != std::end(kReserved);
}

TruthValue TruthValue::term(std::vector<HedgeId> hedges, Primary primary) {
  TruthValue v(Kind::Term);
  v.hedges_ = std::move(hedges);
  v.primary_ = primary;
  return v;
}

HedgeAlgebra::HedgeAlgebra(HedgeAlgebraSpec spec) : spec_(std::move(spec)) {}

HedgeAlgebra HedgeAlgebra::build(const HedgeAlgebraSpec& input) {
  HedgeAlgebraSpec spec = input;
  std::vector<std::string> errors;

  if (!is_identifier(spec.negative_primary)) errors.push_back("invalid primary name '" + spec.negative_primary + "'");
  if (!is_identifier(spec.positive_primary)) errors.push_back("invalid primary name '" + spec.positive_primary + "'");
  if (spec.negative_primary == spec.positive_primary) errors.push_back("primaries must have distinct names");
  for (const auto* prim : {&spec.negative_primary, &spec.positive_primary}) {
    if (is_reserved_truth_word(*prim)) errors.push_back("primary name '" + *prim + "' is reserved");
  }
  if (spec.limit < 0) errors.push_back("limit must be non-negative");

  std::map<std::string, std::size_t> by_name;
  std::set<std::string> symbols;
  std::map<std::pair<HedgeClass, int>, std::string> ranks;
  int p = 0;
  int q = 0;
  for (std::size_t i = 0; i < spec.hedges.size(); ++i) {
    auto& h = spec.hedges[i];
    if (h.symbol.empty()) h.symbol = h.name;
    if (!is_identifier(h.name)) errors.push_back("invalid hedge name '" + h.name + "'");
    if (is_reserved_truth_word(h.name) || h.name == spec.negative_primary || h.name == spec.positive_primary) {
      errors.push_back("hedge name '" + h.name + "' clashes with a primary or reserved word");
    }
    if (!by_name.emplace(h.name, i).second) errors.push_back("hedge '" + h.name + "' declared twice");
    if (!is_identifier(h.symbol)) errors.push_back("invalid symbol '" + h.symbol + "' for hedge '" + h.name + "'");
    if (!symbols.insert(h.symbol).second) errors.push_back("symbol '" + h.symbol + "' used by more than one hedge");
    if (h.rank < 1) errors.push_back("hedge '" + h.name + "' must have rank >= 1");
    auto [it, fresh] = ranks.emplace(std::make_pair(h.cls, h.rank), h.name);
    if (!fresh) {
      errors.push_back("hedges '" + it->second + "' and '" + h.name + "' share rank " + std::to_string(h.rank) +
                       " in " + class_name(h.cls));
    }
    (h.cls == HedgeClass::Positive ? p : q)++;
  }
  if ((p == 0) != (q == 0)) {
    errors.push_back(std::string("hedge class ") + (p == 0 ? "H+" : "H-") + " is empty while the other is not");
  }

  const std::size_t n = spec.hedges.size();
  // 0 = unset, 1 = negative, 2 = positive
  std::vector<std::uint8_t> table(n * n, 0);
  for (const auto& e : spec.positivity) {
    auto m = by_name.find(e.modifier);
    auto t = by_name.find(e.target);
    std::string where = e.line > 0 ? "line " + std::to_string(e.line) + ": " : "";
    if (m == by_name.end()) {
      errors.push_back(where + "positivity entry names undeclared hedge '" + e.modifier + "'");
      continue;
    }
    if (t == by_name.end()) {
      errors.push_back(where + "positivity entry names undeclared hedge '" + e.target + "'");
      continue;
    }
    auto& cell = table[m->second * n + t->second];
    std::uint8_t want = e.positive ? 2 : 1;
    if (cell != 0 && cell != want) {
      errors.push_back(where + "'" + e.modifier + "' is declared both positive and negative w.r.t. '" + e.target + "'");
    }
    cell = want;
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t t = 0; t < n; ++t) {
      if (table[m * n + t] == 0) {
        errors.push_back("missing positivity of '" + spec.hedges[m].name + "' w.r.t. '" + spec.hedges[t].name + "'");
      }
    }
  }
  // Every hedge of one class must act alike on a target, and the other class opposite.
  for (std::size_t t = 0; t < n; ++t) {
    std::uint8_t seen[2] = {0, 0};
    bool mixed = false;
    for (std::size_t m = 0; m < n; ++m) {
      auto cell = table[m * n + t];
      if (cell == 0) continue;
      int c = spec.hedges[m].cls == HedgeClass::Positive ? 0 : 1;
      if (seen[c] != 0 && seen[c] != cell) mixed = true;
      seen[c] = cell;
    }
    if (mixed) {
      errors.push_back("hedges of one class disagree in polarity w.r.t. '" + spec.hedges[t].name + "'");
    } else if (seen[0] != 0 && seen[0] == seen[1]) {
      errors.push_back("H+ and H- have the same polarity w.r.t. '" + spec.hedges[t].name + "'");
    }
  }

  if (!errors.empty()) throw AlgebraError(std::move(errors));

  HedgeAlgebra a(std::move(spec));
  a.p_ = p;
  a.q_ = q;
  a.extended_.assign(n, 0);
  a.by_extended_.assign(static_cast<std::size_t>(p + q + 1), HedgeId{});
  for (std::size_t i = 0; i < n; ++i) {
    const auto& h = a.spec_.hedges[i];
    // Ranks need not be contiguous, so position is the count of same-class hedges below.
    int below = 0;
    for (const auto& o : a.spec_.hedges) {
      if (o.cls == h.cls && o.rank < h.rank) ++below;
    }
    int e = h.cls == HedgeClass::Positive ? below + 1 : -(below + 1);
    a.extended_[i] = e;
    a.by_extended_[static_cast<std::size_t>(e + q)] = HedgeId{static_cast<std::uint16_t>(i)};
  }
  a.positive_.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a.positive_[i] = table[i] == 2;
  return a;
}

const std::string& HedgeAlgebra::primary_name(Primary p) const {
  return p == Primary::Positive ? spec_.positive_primary : spec_.negative_primary;
}

void HedgeAlgebra::check_hedge(HedgeId h) const {
  if (h.value >= spec_.hedges.size()) throw Error("undeclared hedge id " + std::to_string(h.value));
}

const HedgeDecl& HedgeAlgebra::hedge(HedgeId h) const {
  check_hedge(h);
  return spec_.hedges[h.value];
}

std::optional<HedgeId> HedgeAlgebra::find_hedge(std::string_view name) const {
  for (std::size_t i = 0; i < spec_.hedges.size(); ++i) {
    if (spec_.hedges[i].name == name) return HedgeId{static_cast<std::uint16_t>(i)};
  }
  return std::nullopt;
}

HedgeId HedgeAlgebra::require_hedge(std::string_view name) const {
  if (auto h = find_hedge(name)) return *h;
  throw Error("unknown hedge '" + std::string(name) + "'");
}

int HedgeAlgebra::extended_index(HedgeId h) const {
  check_hedge(h);
  return extended_[h.value];
}

std::optional<HedgeId> HedgeAlgebra::hedge_at(int e) const {
  if (e == 0 || e < -q_ || e > p_) return std::nullopt;
  return by_extended_[static_cast<std::size_t>(e + q_)];
}

std::vector<HedgeId> HedgeAlgebra::extended_order() const {
  std::vector<HedgeId> out;
  for (int e = -q_; e <= p_; ++e) {
    if (e != 0) out.push_back(*hedge_at(e));
  }
  return out;
}

bool HedgeAlgebra::is_positive_wrt(HedgeId modifier, HedgeId target) const {
  check_hedge(modifier);
  check_hedge(target);
  return positive_[modifier.value * spec_.hedges.size() + target.value] != 0;
}

int HedgeAlgebra::sign(std::span<const HedgeId> outer_first, Primary primary) const {
  int s = primary == Primary::Positive ? 1 : -1;
  if (outer_first.empty()) return s;
  // Walk from the innermost hedge outward.
  auto it = outer_first.rbegin();
  if (hedge(*it).cls == HedgeClass::Negative) s = -s;
  for (auto prev = it++; it != outer_first.rend(); prev = it++) {
    if (!is_positive_wrt(*it, *prev)) s = -s;
  }
  return s;
}

int HedgeAlgebra::sign(const TruthValue& v) const {
  if (!v.is_term()) return 0;
  return sign(v.hedges(), v.primary());
}

namespace {

int band(const TruthValue& v) {
  switch (v.kind()) {
    case TruthValue::Kind::Bottom: return 0;
    case TruthValue::Kind::Middle: return 2;
    case TruthValue::Kind::Top: return 4;
    case TruthValue::Kind::Term: return v.primary() == Primary::Negative ? 1 : 3;
  }
  return 0;
}

}  // namespace

std::strong_ordering HedgeAlgebra::compare(const TruthValue& x, const TruthValue& y) const {
  int bx = band(x);
  int by = band(y);
  if (bx != by || !x.is_term()) return bx <=> by;

  const auto& hx = x.hedges();
  const auto& hy = y.hedges();
  std::size_t lx = hx.size();
  std::size_t ly = hy.size();
  // j counts matching hedges from the inside.
  std::size_t j = 0;
  while (j < lx && j < ly && hx[lx - 1 - j] == hy[ly - 1 - j]) ++j;
  if (j == lx && j == ly) return std::strong_ordering::equal;

  int ex = j < lx ? extended_index(hx[lx - 1 - j]) : 0;
  int ey = j < ly ? extended_index(hy[ly - 1 - j]) : 0;

  // Direction in which hedges of increasing <=_e move the common suffix z.
  std::vector<HedgeId> probe;
  probe.reserve(j + 1);
  probe.push_back(*hedge_at(p_));
  probe.insert(probe.end(), hx.end() - static_cast<std::ptrdiff_t>(j), hx.end());
  int dir = sign(probe, x.primary());
  return dir > 0 ? ex <=> ey : ey <=> ex;
}

TruthValue HedgeAlgebra::negate(const TruthValue& v) const {
  switch (v.kind()) {
    case TruthValue::Kind::Bottom: return TruthValue::top();
    case TruthValue::Kind::Top: return TruthValue::bottom();
    case TruthValue::Kind::Middle: return v;
    case TruthValue::Kind::Term:
      return TruthValue::term(v.hedges(), v.primary() == Primary::Positive ? Primary::Negative : Primary::Positive);
  }
  return v;
}

TruthValue HedgeAlgebra::apply_hedge(HedgeId h, const TruthValue& v, ApplyMode mode) const {
  check_hedge(h);
  if (!v.is_term()) return v;
  if (v.length() >= static_cast<std::size_t>(spec_.limit)) {
    if (mode == ApplyMode::Strict) {
      throw Error("applying '" + hedge(h).name + "' to '" + format(v) + "' exceeds the length limit " +
                  std::to_string(spec_.limit));
    }
    return v;
  }
  std::vector<HedgeId> hs;
  hs.reserve(v.length() + 1);
  hs.push_back(h);
  hs.insert(hs.end(), v.hedges().begin(), v.hedges().end());
  return TruthValue::term(std::move(hs), v.primary());
}

void HedgeAlgebra::check(const TruthValue& v) const {
  for (auto h : v.hedges()) check_hedge(h);
  if (v.length() > static_cast<std::size_t>(spec_.limit)) {
    throw Error("truth value has " + std::to_string(v.length()) + " hedges, limit is " + std::to_string(spec_.limit));
  }
}

std::string HedgeAlgebra::format(const TruthValue& v) const {
  switch (v.kind()) {
    case TruthValue::Kind::Bottom: return "absfalse";
    case TruthValue::Kind::Middle: return "middle";
    case TruthValue::Kind::Top: return "abstrue";
    case TruthValue::Kind::Term: break;
  }
  std::string out;
  for (auto h : v.hedges()) {
    out += hedge(h).name;
    out += ' ';
  }
  out += primary_name(v.primary());
  return out;
}

TruthValue HedgeAlgebra::parse_value(std::string_view literal) const {
  auto words = split_words(literal);
  if (words.empty()) throw Error("empty truth value");
  if (words.size() == 1) {
    if (words[0] == "absfalse") return TruthValue::bottom();
    if (words[0] == "middle") return TruthValue::middle();
    if (words[0] == "abstrue") return TruthValue::top();
  }
  Primary primary;
  if (words.back() == spec_.positive_primary) {
    primary = Primary::Positive;
  } else if (words.back() == spec_.negative_primary) {
    primary = Primary::Negative;
  } else {
    throw Error("truth value '" + std::string(literal) + "' does not end in a primary term");
  }
  std::vector<HedgeId> hs;
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    auto h = find_hedge(words[i]);
    if (!h) throw Error("unknown hedge '" + words[i] + "' in truth value '" + std::string(literal) + "'");
    hs.push_back(*h);
  }
  auto v = TruthValue::term(std::move(hs), primary);
  check(v);
  return v;
}

}  // namespace fllp
