#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
  int status = 0;
  std::string out;
  std::string err;
};

Run fllp_run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "fllp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.status = fllp::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string sample(const std::string& name) { return std::string(FLLP_SOURCE_DIR "/samples/") + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = std::string(FLLP_BINARY_DIR "/") + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("domain listing") {
  auto r = fllp_run({"domain"});
  CHECK(r.status == 0);
  CHECK(r.out == read_file(FLLP_TEST_DATA "/golden/domain.txt"));
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 45);

  auto inv = fllp_run({"domain", "--inverse"});
  CHECK(inv.status == 0);
  CHECK(inv.out.rfind(r.out, 0) == 0);
  CHECK(inv.out.size() > r.out.size());

  auto cfg = fllp_run({"--algebra", sample("vmpl.alg"), "domain"});
  CHECK(cfg.out == r.out);
  auto after = fllp_run({"domain", "--algebra", sample("vmpl.alg")});
  CHECK(after.status == 0);
  CHECK(after.out == r.out);
}

TEST_CASE("query answers") {
  auto r = fllp_run({"query", sample("good_employee.fllp"), "?- gd_em(ann)."});
  CHECK(r.status == 0);
  CHECK(r.out == "answer: ; tv=probably true (v30)\n");

  auto x = fllp_run({"query", sample("good_employee.fllp"), "?- gd_em(X)."});
  CHECK(x.out == "answer: X=ann ; tv=probably true (v30)\n");

  auto h = fllp_run({"query", sample("hotel.fllp"), "?- cn_ht(mt, nov, H)."});
  CHECK(h.out == "answer: H=cw ; tv=little probably true (v28)\n");
}

TEST_CASE("trace output ends with the answer") {
  auto r = fllp_run({"query", sample("good_employee.fllp"), "?- gd_em(ann).", "--trace"});
  CHECK(r.status == 0);
  CHECK(r.out.find("rule 1 (line 4)") != std::string::npos);
  CHECK(r.out.find("6  rule 5: probably true") != std::string::npos);
  CHECK(r.out.size() >= 33);
  CHECK(r.out.substr(r.out.size() - 33) == "answer: ; tv=probably true (v30)\n");
}

TEST_CASE("queries read from input") {
  auto r = fllp_run({"query", sample("good_employee.fllp")}, "?- gd_em(X).\n\n?- st_hd(Y).\nbad(\n");
  CHECK(r.out ==
        "answer: X=ann ; tv=probably true (v30)\n"
        "answer: Y=ann ; tv=more true (v36)\n");
  CHECK(r.err.find("1:5") != std::string::npos);
}

TEST_CASE("limits give status 2") {
  auto r = fllp_run({"query", sample("good_employee.fllp"), "?- gd_em(X).", "--depth", "2"});
  CHECK(r.status == 2);
  CHECK(r.out.find("no answers") != std::string::npos);
  CHECK(fllp_run({"model", sample("hotel.fllp"), "--max-ground", "3"}).status == 2);
}

TEST_CASE("errors give status 1") {
  auto bad = temp_file("cli_bad.fllp", "p(a) : quite true.\n");
  auto r = fllp_run({"check", bad});
  CHECK(r.status == 1);
  CHECK(r.err.find(":1:8: unknown hedge 'quite'") != std::string::npos);
  CHECK(fllp_run({}).status == 1);
  CHECK(fllp_run({"query", sample("missing.fllp"), "?- p."}).status == 1);
  CHECK(fllp_run({"query", sample("good_employee.fllp"), "?- p("}).status == 1);
  CHECK(fllp_run({"--algebra", sample("missing.alg"), "domain"}).status == 1);

  auto dup = temp_file("cli_dup.fllp", "p(a) : true.\np(a) : very true.\n");
  CHECK(fllp_run({"check", dup}).status == 1);
  auto unsafe = temp_file("cli_unsafe.fllp", "p(X) <-g q : true.\nq : true.\n");
  CHECK(fllp_run({"check", unsafe}).status == 0);
  CHECK(fllp_run({"check", "--safe", unsafe}).status == 1);
}

TEST_CASE("check") {
  auto r = fllp_run({"check", sample("hotel.fllp")});
  CHECK(r.status == 0);
  CHECK(r.out == "ok: 2 rule(s), 4 fact(s)\n");
}

TEST_CASE("model") {
  auto r = fllp_run({"model", sample("good_employee_luka.fllp")});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "gd_em(ann) : probably probably true (v29)\n"
        "hira_un(ann) : very true (v41)\n"
        "st_hd(ann) : more true (v36)\n");
  auto q = fllp_run({"model", sample("good_employee_luka.fllp"), "?- gd_em(X)."});
  CHECK(q.out == "answer: X=ann ; tv=probably probably true (v29)\n");
}

TEST_CASE("compile") {
  auto r = fllp_run({"compile", sample("good_employee_luka.fllp"), "?- gd_em(X)."});
  CHECK(r.status == 0);
  CHECK(r.out.find("hira_un(ann,41).\nst_hd(ann,36).\n") != std::string::npos);
  CHECK(r.out.substr(r.out.size() - 25) == "?- gd_em(X,Truth_value).\n");
}

TEST_CASE("surface") {
  auto r = fllp_run({"surface", sample("furnace.ctl")});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "      off            low             high           best\n"
        "cold  little true    very true       true           low\n"
        "cool  little true    more true       probably true  low\n"
        "mild  probably true  little true     little true    off\n"
        "warm  very true      probably false  absfalse       off\n");
  auto p = fllp_run({"surface", sample("furnace.ctl"), "--program"});
  CHECK(p.out.find("good(X, Y) <-g") != std::string::npos);
  CHECK(fllp_run({"surface", sample("furnace.ctl"), "--lukasiewicz"}).status == 0);
}

TEST_CASE("output file") {
  std::string path = FLLP_BINARY_DIR "/cli_out.txt";
  std::remove(path.c_str());
  auto r = fllp_run({"--out", path, "domain"});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(read_file(path) == read_file(FLLP_TEST_DATA "/golden/domain.txt"));

  std::remove(path.c_str());
  auto q = fllp_run({"query", sample("good_employee.fllp"), "?- gd_em(ann).", "--out", path});
  CHECK(q.status == 0);
  CHECK(read_file(path) == "answer: ; tv=probably true (v30)\n");
}

TEST_CASE("repeated runs print the same bytes") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"domain", "--inverse"},
           {"query", sample("hotel_probably.fllp"), "?- cn_ht(X, Y, Z)."},
           {"model", sample("hotel_plain.fllp")},
           {"compile", sample("hotel.fllp")},
           {"surface", sample("furnace.ctl")}}) {
    auto a = fllp_run(args);
    auto b = fllp_run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}
