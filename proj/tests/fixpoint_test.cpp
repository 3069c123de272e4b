#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "fllp/connectives.hpp"
#include "fllp/error.hpp"
#include "fllp/fixpoint.hpp"
#include "support.hpp"

using namespace fllp;
using namespace fllp::testing;

namespace {

Program sample(const std::string& name) {
  std::ifstream in(std::string(FLLP_SOURCE_DIR "/samples/") + name);
  std::ostringstream s;
  s << in.rdbuf();
  return parse(s.str());
}

Degree value_of(const GroundProgram& gp, const Interpretation& f, const char* atom) {
  auto id = gp.find(parse_query(atom));
  REQUIRE(id);
  return f[*id];
}

Interpretation random_interpretation(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> pick(0, 44);
  Interpretation f(n);
  for (AtomId i = 0; i < n; ++i) f.set(i, Degree{pick(rng)});
  return f;
}

// Whether f grades every ground statement at least at its value, checked
// straight from the definition: I(f(head), f(body)) >= r for rules.
bool is_model(const GroundProgram& gp, const Interpretation& f) {
  const auto& t = *gp.truth();
  for (const auto& fact : gp.facts()) {
    if (f[fact.atom] < fact.tv) return false;
  }
  for (const auto& r : gp.rules()) {
    Degree body = eval_ground_body(r.body, f, t);
    if (implicator(r.implication, f[r.head], body, t.domain().top()) < r.tv) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("least model of the good employee program") {
  auto gp = ground(sample("good_employee_luka.fllp"));
  for (auto mode : {FixpointMode::Naive, FixpointMode::Delta}) {
    auto lm = least_model(gp, mode);
    CHECK(value_of(gp, lm.model, "gd_em(ann)") == Degree{29});
    CHECK(lm.iterations == 3);
  }
  auto lm = least_model(gp);
  CHECK(dump_model(gp, lm.model) ==
        "gd_em(ann) : probably probably true (v29)\n"
        "hira_un(ann) : very true (v41)\n"
        "st_hd(ann) : more true (v36)\n");
}

TEST_CASE("least models of the hotel programs") {
  struct Case {
    const char* file;
    std::uint32_t value;
  };
  for (auto c : {Case{"hotel.fllp", 28}, Case{"hotel_probably.fllp", 35}, Case{"hotel_plain.fllp", 34}}) {
    auto gp = ground(sample(c.file));
    auto naive = least_model(gp, FixpointMode::Naive);
    auto delta = least_model(gp, FixpointMode::Delta);
    CAPTURE(c.file);
    CHECK(value_of(gp, naive.model, "cn_ht(mt, nov, cw)") == Degree{c.value});
    CHECK(naive.model == delta.model);
    CHECK(naive.iterations == 4);
    CHECK(delta.iterations == 4);
  }
}

TEST_CASE("one round from the bottom gives the facts") {
  auto gp = ground(sample("good_employee.fllp"));
  auto f1 = tp_apply(gp, Interpretation(gp.atom_count()));
  CHECK(value_of(gp, f1, "st_hd(ann)") == Degree{36});
  CHECK(value_of(gp, f1, "hira_un(ann)") == Degree{41});
  CHECK(value_of(gp, f1, "gd_em(ann)") == Degree{0});
  auto f2 = tp_apply(gp, f1);
  CHECK(value_of(gp, f2, "gd_em(ann)") == Degree{30});
  CHECK(tp_apply(gp, f2) == f2);
}

TEST_CASE("grounding") {
  auto p = parse("p(X, Y) <-g q(X) : true.\nq(a) : true.\nr(b) : true.\n");
  auto gp = ground(p);
  CHECK(gp.universe() == std::vector<std::string>{"a", "b"});
  CHECK(gp.rules().size() == 4);
  CHECK(gp.facts().size() == 2);
  CHECK(gp.base_size() == 4 + 2 + 2);
  CHECK(iteration_bound(gp) == 8 * 45);
  GroundOptions tight;
  tight.max_instances = 3;
  CHECK_THROWS_AS(ground(p, tight), ResourceError);
  GroundOptions wider;
  wider.extra_constants = {"c", "a"};
  CHECK(ground(p, wider).universe() == std::vector<std::string>{"a", "b", "c"});

  auto lm = least_model(gp);
  auto answers = query_model(gp, lm.model, parse_query("p(a, Y)"));
  REQUIRE(answers.size() == 2);
  CHECK(format_substitution(answers[0].bindings) == "Y=a");
  CHECK(format_substitution(answers[1].bindings) == "Y=b");
  CHECK(answers[0].tv == lit("true"));
  CHECK(query_model(gp, lm.model, parse_query("p(b, Y)")).empty());
  CHECK(query_model(gp, lm.model, parse_query("p(b, Y)"), true).size() == 2);
  CHECK(query_model(gp, lm.model, parse_query("nothing(X)")).empty());
  CHECK(query_model(gp, lm.model, parse_query("q(X, Y)")).empty());
}

TEST_CASE("an empty program") {
  auto gp = ground(parse("% nothing\n"));
  CHECK(gp.universe() == std::vector<std::string>{"a"});
  CHECK(gp.atom_count() == 0);
  auto lm = least_model(gp);
  CHECK(lm.iterations == 1);
  CHECK(dump_model(gp, lm.model).empty());
  CHECK(iteration_bound(gp) == 1);
}

TEST_CASE("recursion converges") {
  auto gp = ground(parse("anc(X, Y) <-g par(X, Y) : true.\nanc(X, Y) <-g and_g(par(X, Z), anc(Z, Y)) : very true.\n"
                         "par(a, b) : very true.\npar(b, c) : more true.\npar(c, a) : true.\n"));
  auto naive = least_model(gp, FixpointMode::Naive);
  auto delta = least_model(gp, FixpointMode::Delta);
  CHECK(naive.model == delta.model);
  CHECK(value_of(gp, naive.model, "anc(a, c)") == lit("true"));
  CHECK(value_of(gp, naive.model, "anc(a, a)") == lit("true"));
  CHECK(value_of(gp, naive.model, "anc(b, b)") == lit("true"));
  CHECK(naive.iterations <= iteration_bound(gp));
}

TEST_CASE("T_P is monotone") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::uint32_t> pick(0, 44);
  for (int i = 0; i < 200; ++i) {
    auto gp = ground(random_program(rng).program);
    auto lo = random_interpretation(rng, gp.atom_count());
    Interpretation hi(gp.atom_count());
    for (AtomId a = 0; a < gp.atom_count(); ++a) hi.set(a, Degree{std::max(lo[a].index, pick(rng))});
    REQUIRE(lo.leq(hi));
    CHECK(tp_apply(gp, lo).leq(tp_apply(gp, hi)));
  }
}

TEST_CASE("T_P(f) <= f exactly when f is a model") {
  std::mt19937 rng(19);
  int models = 0;
  for (int i = 0; i < 200; ++i) {
    auto gp = ground(random_program(rng).program);
    auto lm = least_model(gp);
    std::vector<Interpretation> samples{random_interpretation(rng, gp.atom_count()), lm.model};
    // Raising the least model a little keeps it a model.
    auto up = lm.model;
    for (AtomId a = 0; a < gp.atom_count(); ++a) up.set(a, Degree{std::min(44u, up[a].index + 3)});
    samples.push_back(up);
    for (const auto& f : samples) {
      bool m = is_model(gp, f);
      models += m;
      CHECK(tp_apply(gp, f).leq(f) == m);
    }
  }
  CHECK(models >= 400);
}

TEST_CASE("the iteration is an ascending chain that stops within the bound") {
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    auto rp = random_program(rng);
    auto gp = ground(rp.program);
    Interpretation f(gp.atom_count());
    std::size_t rounds = 0;
    for (;;) {
      auto next = tp_apply(gp, f);
      ++rounds;
      CHECK(f.leq(next));
      if (next == f) break;
      f = next;
    }
    auto naive = least_model(gp, FixpointMode::Naive);
    auto delta = least_model(gp, FixpointMode::Delta);
    CAPTURE(rp.text);
    CHECK(naive.model == f);
    CHECK(delta.model == f);
    CHECK(naive.iterations == rounds);
    CHECK(delta.iterations == rounds);
    CHECK(rounds <= iteration_bound(gp));
  }
}
