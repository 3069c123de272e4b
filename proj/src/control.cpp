#include "fllp/control.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "fllp/error.hpp"

namespace fllp {

namespace {

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string join(const std::vector<std::string>& ws, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) out += (i > from ? " " : "") + ws[i];
  return out;
}

bool is_constant(const std::string& s) {
  if (s.empty() || !(std::islower(static_cast<unsigned char>(s[0])) || std::isdigit(static_cast<unsigned char>(s[0])))) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Body label_body(const ControlLabel& l, const std::string& var) {
  Body b = Body::leaf(Atom{l.predicate, {Term::variable(var)}});
  for (auto it = l.hedges.rbegin(); it != l.hedges.rend(); ++it) b = Body::hedged(*it, std::move(b));
  return b;
}

}  // namespace

ControlSystem parse_control(std::string_view text, TruthTables truth) {
  if (!truth) throw Error("no truth tables given");
  ControlSystem cs;
  cs.truth = truth;
  const auto& algebra = truth->algebra();
  const auto& domain = truth->domain();

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, line_no, 1); };
  auto label = [&](const std::vector<std::string>& ws, std::size_t from, std::size_t to) {
    if (from >= to) fail("empty label");
    ControlLabel l;
    for (std::size_t i = from; i + 1 < to; ++i) {
      auto h = algebra.find_hedge(ws[i]);
      if (!h) fail("unknown hedge '" + ws[i] + "'");
      l.hedges.push_back(*h);
    }
    l.predicate = ws[to - 1];
    if (!is_constant(l.predicate) || std::isdigit(static_cast<unsigned char>(l.predicate[0]))) {
      fail("invalid predicate name '" + l.predicate + "'");
    }
    if (l.predicate == "good") fail("'good' is reserved for the compiled rules");
    return l;
  };
  auto degree = [&](const std::string& lit) {
    try {
      return domain.parse(lit);
    } catch (const Error& e) {
      fail(e.what());
    }
    return Degree{};
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('%'));
    auto ws = words(line);
    if (ws.empty()) continue;
    const std::string& key = ws[0];
    if (key == "inputs:" || key == "outputs:") {
      auto& points = key == "inputs:" ? cs.inputs : cs.outputs;
      for (std::size_t i = 1; i < ws.size(); ++i) {
        if (!is_constant(ws[i])) fail("invalid point name '" + ws[i] + "'");
        if (std::find(points.begin(), points.end(), ws[i]) != points.end()) fail("point '" + ws[i] + "' listed twice");
        points.push_back(ws[i]);
      }
    } else if (key == "rule:") {
      auto arrow = std::find(ws.begin(), ws.end(), "=>");
      if (arrow == ws.end()) fail("expected 'rule: <label> => <label> [conf <truth value>]'");
      std::size_t a = static_cast<std::size_t>(arrow - ws.begin());
      auto conf = std::find(ws.begin() + static_cast<std::ptrdiff_t>(a), ws.end(), "conf");
      std::size_t c = static_cast<std::size_t>(conf - ws.begin());
      ControlRule r{label(ws, 1, a), label(ws, a + 1, c), std::nullopt};
      if (c < ws.size()) {
        if (c + 1 == ws.size()) fail("'conf' needs a truth value");
        r.confidence = degree(join(ws, c + 1, ws.size()));
      }
      cs.rules.push_back(std::move(r));
    } else if (key == "sat") {
      if (ws.size() < 4) fail("expected 'sat <predicate> <point> <truth value>'");
      auto v = degree(join(ws, 3, ws.size()));
      if (!cs.sat[ws[1]].emplace(ws[2], v).second) fail("duplicate entry for " + ws[1] + "(" + ws[2] + ")");
    } else {
      fail("unknown entry '" + key + "'");
    }
  }
  return cs;
}

Program compile_control(const ControlSystem& cs, Implication implication) {
  if (!cs.truth) throw Error("control system has no truth tables");
  Program p;
  p.truth = cs.truth;
  const auto& domain = cs.truth->domain();

  std::set<std::string> in_preds;
  std::set<std::string> out_preds;
  for (const auto& r : cs.rules) {
    in_preds.insert(r.input.predicate);
    out_preds.insert(r.output.predicate);
    Rule rule;
    rule.head = Atom{"good", {Term::variable("X"), Term::variable("Y")}};
    rule.implication = implication;
    rule.body = Body::connective(Connective::ConjG, {label_body(r.input, "X"), label_body(r.output, "Y")});
    rule.tv = r.confidence.value_or(domain.top());
    if (rule.tv == domain.bottom()) throw Error("rule confidence must be above absfalse");
    p.rules.push_back(std::move(rule));
  }
  for (const auto& pred : in_preds) {
    if (out_preds.count(pred)) throw Error("predicate '" + pred + "' is used for both inputs and outputs");
  }

  auto emit = [&](const std::set<std::string>& preds, const std::vector<std::string>& points) {
    for (const auto& pred : preds) {
      auto table = cs.sat.find(pred);
      for (const auto& pt : points) {
        if (table == cs.sat.end() || !table->second.count(pt)) {
          throw Error("missing satisfaction degree for " + pred + "(" + pt + ")");
        }
        Degree v = table->second.at(pt);
        if (v != domain.bottom()) p.facts.push_back(Fact{Atom{pred, {Term::constant(pt)}}, v, {}});
      }
    }
  };
  emit(in_preds, cs.inputs);
  emit(out_preds, cs.outputs);
  return p;
}

std::size_t GoodnessSurface::recommended(std::size_t input) const {
  const auto& row = values.at(input);
  return static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin());
}

GoodnessSurface goodness_surface(const ControlSystem& cs, const Program& compiled) {
  auto gp = ground(compiled);
  Interpretation f(gp.atom_count());
  f = tp_apply(gp, f);
  f = tp_apply(gp, f);
  if (!(tp_apply(gp, f) == f)) throw Error("the goodness relation is not a fixpoint after two rounds");

  GoodnessSurface s;
  s.inputs = cs.inputs;
  s.outputs = cs.outputs;
  for (const auto& r : cs.inputs) {
    std::vector<Degree> row;
    for (const auto& t : cs.outputs) {
      auto id = gp.find(Atom{"good", {Term::constant(r), Term::constant(t)}});
      row.push_back(id ? f[*id] : Degree{0});
    }
    s.values.push_back(std::move(row));
  }
  return s;
}

std::string format_surface(const GoodnessSurface& s, const TruthDomain& domain) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  header.insert(header.end(), s.outputs.begin(), s.outputs.end());
  header.push_back("best");
  cells.push_back(header);
  for (std::size_t i = 0; i < s.inputs.size(); ++i) {
    std::vector<std::string> row{s.inputs[i]};
    for (auto v : s.values[i]) row.push_back(domain.name(v));
    row.push_back(s.outputs.empty() ? "-" : s.outputs[s.recommended(i)]);
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) line += "  ";
      line += row[j] + std::string(width[j] - row[j].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace fllp
