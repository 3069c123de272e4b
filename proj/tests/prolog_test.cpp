#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fllp/error.hpp"
#include "fllp/prolog.hpp"
#include "mini_prolog.hpp"
#include "support.hpp"

using namespace fllp;
using namespace fllp::testing;

namespace {

Program sample(const std::string& name) { return parse(read_file(std::string(FLLP_SOURCE_DIR "/samples/") + name)); }

std::vector<std::string> engine_answers(const Program& p, const Atom& q, bool positive_only) {
  SolveOptions o;
  o.exhaustive = true;
  o.depth = 64;
  auto r = solve(p, q, o);
  REQUIRE(r.complete());
  std::vector<std::string> out;
  for (const auto& a : r.answers) {
    if (positive_only && a.tv.index == 0) continue;
    out.push_back(canonical(a.subst, variables_of(q)) + " | " + std::to_string(a.tv.index));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> prolog_answers(mini_prolog::Interpreter& m, const Atom& q, bool positive_only) {
  std::vector<std::string> out;
  for (const auto& row : m.solve(compile_query(q))) {
    std::string tv = row.at("Truth_value");
    if (positive_only && tv == "0") continue;
    std::string s;
    for (const auto& v : variables_of(q)) s += (s.empty() ? "" : ", ") + v.name + "=" + row.at(v.name);
    out.push_back(s + " | " + tv);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_disjunction(const Body& b) {
  if (b.kind == Body::Kind::Disj) return true;
  return std::any_of(b.children.begin(), b.children.end(), has_disjunction);
}

}  // namespace

TEST_CASE("clauses of the good employee program") {
  auto clauses = compile_clauses(sample("good_employee_luka.fllp"));
  CHECK(clauses ==
        "gd_em(X,_TV0) :- st_hd(X,_TV1), inv_map(v,_TV1,_TV2), hira_un(X,_TV3), inv_map(p,_TV3,_TV4), "
        "and_luka(_TV2,_TV4,_TV5), and_godel(_TV5,38,_TV0).\n"
        "hira_un(ann,41).\n"
        "st_hd(ann,36).\n");
}

TEST_CASE("the full program contains the golden listing") {
  auto p = sample("good_employee_luka.fllp");
  std::string text = compile_program(p) + compile_query(parse_query("?- gd_em(X).")) + "\n";
  CHECK(contains_clauses_in_order(text, read_file(FLLP_TEST_DATA "/golden/good_employee_luka.pl")));
  CHECK(compile_program(p) == compile_program(sample("good_employee_luka.fllp")));
}

TEST_CASE("the preamble") {
  auto text = compile_program(parse("p(a) : true.\n"));
  CHECK(text.find("and_godel(X,Y,Z) :- (X=<Y,Z=X;X>Y,Z=Y).\n") != std::string::npos);
  CHECK(text.find("and_luka(X,Y,Z) :- H is X+Y-44,(H=<0,Z=0;H>0,Z=H).\n") != std::string::npos);
  CHECK(text.find("or_godel(X,Y,Z) :- (X=<Y,Z=Y;X>Y,Z=X).\n") != std::string::npos);
  CHECK(text.find(":- dynamic(p/2).\n") != std::string::npos);
  CHECK(text.find("%   29 = probably probably true\n") != std::string::npos);
  // One row per hedge for each of the 42 hedged values, one each for 0, W and 1.
  std::size_t inv = 0;
  for (std::size_t at = text.find("\ninv_map("); at != std::string::npos; at = text.find("\ninv_map(", at + 1)) ++inv;
  CHECK(inv == 42 * 4 + 3);
  CHECK(text.substr(text.size() - 9) == "p(a,33).\n");
}

TEST_CASE("queries") {
  CHECK(compile_query(parse_query("?- gd_em(X).")) == "?- gd_em(X,Truth_value).");
  CHECK(compile_query(parse_query("?- p(a).")) == "?- p(a,Truth_value).");
  CHECK(compile_query(parse_query("?- p.")) == "?- p(Truth_value).");
  CHECK(compile_query(parse_query("?- cn_ht(mt, nov, H).")) == "?- cn_ht(mt,nov,H,Truth_value).");
  CHECK(compile_query(parse_query("?- p(Truth_value, X).")) == "?- p(Truth_value,X,Truth_value1).");
}

TEST_CASE("hedges, disjunction and implications") {
  auto p = parse("a(X) <-l or(#little(b(X)), and_g(c(X), d, #very(#more(c(X))))) : little true.\n");
  CHECK(compile_clauses(p) ==
        "a(X,_TV0) :- b(X,_TV1), inv_map(l,_TV1,_TV2), c(X,_TV3), d(_TV4), c(X,_TV5), inv_map(m,_TV5,_TV6), "
        "inv_map(v,_TV6,_TV7), and_godel(_TV3,_TV4,_TV8), and_godel(_TV8,_TV7,_TV9), "
        "or_godel(_TV2,_TV9,_TV10), and_luka(_TV10,25,_TV0).\n");
}

TEST_CASE("helper names are reserved") {
  CHECK_THROWS_AS(compile_program(parse("inv_map(a, b) : true.\n")), Error);
  CHECK_NOTHROW(compile_program(parse("inv_map(a) : true.\n")));
}

TEST_CASE("the generated text runs") {
  mini_prolog::Interpreter m(compile_program(sample("good_employee_luka.fllp")));
  auto rows = m.solve("?- gd_em(X,Truth_value).");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].at("X") == "ann");
  CHECK(rows[0].at("Truth_value") == "29");

  mini_prolog::Interpreter hotel(compile_program(sample("hotel.fllp")));
  auto h = hotel.solve("?- cn_ht(mt,nov,H,Truth_value).");
  REQUIRE(h.size() == 1);
  CHECK(h[0].at("H") == "cw");
  CHECK(h[0].at("Truth_value") == "28");
}

TEST_CASE("the generated text agrees with the solver on random programs") {
  std::mt19937 rng(41);
  int exact = 0;
  int contained = 0;
  for (int i = 0; i < 300; ++i) {
    auto rp = random_program(rng);
    if (rp.recursive) continue;
    bool disj = std::any_of(rp.program.rules.begin(), rp.program.rules.end(),
                            [](const Rule& r) { return has_disjunction(r.body); });
    mini_prolog::Interpreter m(compile_program(rp.program));
    for (const auto& q : rp.queries) {
      CAPTURE(rp.text);
      CAPTURE(format_atom(q));
      if (!disj) {
        // Without disjunction an unmatched atom forces absfalse, which is
        // exactly where the generated text fails instead.
        CHECK(prolog_answers(m, q, true) == engine_answers(rp.program, q, true));
        ++exact;
      } else {
        auto pl = prolog_answers(m, q, false);
        auto en = engine_answers(rp.program, q, false);
        CHECK(std::includes(en.begin(), en.end(), pl.begin(), pl.end()));
        ++contained;
      }
    }
  }
  CHECK(exact >= 200);
  CHECK(contained >= 20);
}
