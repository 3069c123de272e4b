#include "fllp/algebra_config.hpp"

#include <fstream>
#include <sstream>

#include "fllp/error.hpp"

namespace fllp {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    if (comma == std::string_view::npos) comma = s.size();
    out.push_back(trim(s.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool parse_int(const std::string& s, int& out) {
  try {
    std::size_t used = 0;
    out = std::stoi(s, &used);
    return used == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

HedgeAlgebraSpec parse_algebra_config(std::string_view text) {
  HedgeAlgebraSpec spec;
  spec.hedges.clear();
  std::vector<std::string> errors;
  bool have_primary = false;
  bool have_limit = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto pct = raw.find('%');
    std::string line = trim(std::string_view(raw).substr(0, pct));
    if (line.empty()) continue;
    const std::string at = "line " + std::to_string(line_no) + ": ";

    auto colon = line.find(':');
    if (colon == std::string::npos) {
      errors.push_back(at + "expected '<key>: <value>'");
      continue;
    }
    std::string key = trim(std::string_view(line).substr(0, colon));
    std::string rest = trim(std::string_view(line).substr(colon + 1));

    if (key == "primary") {
      auto names = split_list(rest);
      if (names.size() != 2 || names[0].empty() || names[1].empty()) {
        errors.push_back(at + "primary needs exactly two names, negative first");
        continue;
      }
      spec.negative_primary = names[0];
      spec.positive_primary = names[1];
      have_primary = true;
    } else if (key == "hedge") {
      auto ws = words(rest);
      if (ws.empty()) {
        errors.push_back(at + "hedge needs a name");
        continue;
      }
      HedgeDecl h;
      h.name = ws[0];
      bool have_class = false;
      bool have_rank = false;
      for (std::size_t i = 1; i < ws.size(); ++i) {
        auto eq = ws[i].find('=');
        std::string k = ws[i].substr(0, eq);
        std::string v = eq == std::string::npos ? "" : ws[i].substr(eq + 1);
        if (k == "class" && (v == "+" || v == "-")) {
          h.cls = v == "+" ? HedgeClass::Positive : HedgeClass::Negative;
          have_class = true;
        } else if (k == "rank" && parse_int(v, h.rank)) {
          have_rank = true;
        } else if (k == "symbol" && !v.empty()) {
          h.symbol = v;
        } else {
          errors.push_back(at + "bad hedge attribute '" + ws[i] + "'");
        }
      }
      if (!have_class) errors.push_back(at + "hedge '" + h.name + "' needs class=+ or class=-");
      if (!have_rank) errors.push_back(at + "hedge '" + h.name + "' needs rank=<n>");
      spec.hedges.push_back(std::move(h));
    } else if (key == "positive" || key == "negative") {
      auto arrow = rest.find("->");
      if (arrow == std::string::npos) {
        errors.push_back(at + "expected '<hedge> -> <hedge>, ...'");
        continue;
      }
      std::string modifier = trim(std::string_view(rest).substr(0, arrow));
      for (auto& target : split_list(std::string_view(rest).substr(arrow + 2))) {
        if (modifier.empty() || target.empty()) {
          errors.push_back(at + "empty hedge name in positivity entry");
          continue;
        }
        spec.positivity.push_back({modifier, target, key == "positive", line_no});
      }
    } else if (key == "limit") {
      if (!parse_int(rest, spec.limit)) errors.push_back(at + "limit must be an integer");
      have_limit = true;
    } else if (key == "inverse") {
      auto arrow = rest.find("->");
      auto ws = words(std::string_view(rest).substr(0, arrow == std::string::npos ? rest.size() : arrow));
      if (arrow == std::string::npos || ws.size() < 2) {
        errors.push_back(at + "expected 'inverse: <hedge> <value> -> <value>'");
        continue;
      }
      InverseOverride o;
      o.hedge = ws[0];
      for (std::size_t i = 1; i < ws.size(); ++i) o.argument += (i > 1 ? " " : "") + ws[i];
      o.value = trim(std::string_view(rest).substr(arrow + 2));
      o.line = line_no;
      if (o.value.empty()) {
        errors.push_back(at + "inverse entry has no value");
        continue;
      }
      spec.inverse_overrides.push_back(std::move(o));
    } else {
      errors.push_back(at + "unknown key '" + key + "'");
    }
  }
  if (!have_primary) errors.push_back("missing 'primary:' line");
  if (!have_limit) errors.push_back("missing 'limit:' line");
  if (!errors.empty()) throw AlgebraError(std::move(errors));
  return spec;
}

HedgeAlgebraSpec load_algebra_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read algebra file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_config(buf.str());
}

}  // namespace fllp
