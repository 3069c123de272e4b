#include "cli.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fllp/control.hpp"
#include "fllp/error.hpp"
#include "fllp/fixpoint.hpp"
#include "fllp/parser.hpp"
#include "fllp/prolog.hpp"
#include "fllp/solver.hpp"

namespace fllp::cli {

namespace {

namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kLimit = 2;

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Settings {
  std::string algebra;
  std::string out_path;
};

// Flag first, then the program's own directive, then FLLP_ALGEBRA, then the built-in algebra.
TruthTables resolve_truth(const Settings& s, const std::optional<std::string>& directive, const fs::path& program) {
  if (!s.algebra.empty()) return truth_from_file(s.algebra);
  if (directive) {
    fs::path p(*directive);
    if (p.is_relative()) p = program.parent_path() / p;
    return truth_from_file(p);
  }
  if (const char* env = std::getenv("FLLP_ALGEBRA"); env && *env) return truth_from_file(env);
  return default_truth();
}

Program load_program(const Settings& s, const std::string& path) {
  std::string text = read_file(path);
  try {
    auto truth = resolve_truth(s, find_algebra_directive(text), path);
    return parse_program(text, truth);
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

std::string answer_line(const std::string& bindings, Degree tv, const TruthDomain& d) {
  return "answer:" + (bindings.empty() ? std::string() : " " + bindings) + " ; tv=" + d.format(tv);
}

struct QueryFlags {
  std::size_t depth = 64;
  std::string threshold;
  bool best = false;
  bool exhaustive = false;
  bool trace = false;
};

// Returns true when a search limit cut the search short.
bool run_query(const Program& p, const std::string& text, const QueryFlags& f, std::ostream& out, std::ostream& err) {
  Atom q = parse_query(text);
  SolveOptions o;
  o.depth = f.depth;
  o.best = f.best;
  o.exhaustive = f.exhaustive;
  if (!f.threshold.empty()) o.threshold = p.domain().parse(f.threshold);
  if (f.trace) o.trace = &out;
  auto result = solve(p, q, o);
  for (const auto& a : result.answers) out << answer_line(format_substitution(a.subst), a.tv, p.domain()) << "\n";
  if (result.answers.empty()) out << "no answers\n";
  if (result.stats.exhausted > 0) {
    err << "note: the depth bound " << f.depth << " stopped " << result.stats.exhausted
        << " derivation(s); answers may be incomplete. `fllp model` computes exact values for recursive programs.\n";
  }
  if (result.stats.budget_exceeded) err << "note: step budget exhausted; the search was stopped early.\n";
  return !result.complete();
}

void write_output(const Settings& s, const std::string& text, std::ostream& out) {
  if (s.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(s.out_path);
  if (!f) throw Error("cannot write '" + s.out_path + "'");
  f << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy linguistic logic programming: queries, least models, control surfaces and clause generation"};
  app.name("fllp");
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  app.add_option("--algebra", settings.algebra, "Hedge algebra description (default: FLLP_ALGEBRA or built-in)");
  app.add_option("--out", settings.out_path, "Write output to this file instead of stdout");

  auto* domain_cmd = app.add_subcommand("domain", "List the ordered truth domain");
  bool show_inverse = false;
  domain_cmd->add_flag("--inverse", show_inverse, "Also print the inverse mapping of every hedge");

  auto* check_cmd = app.add_subcommand("check", "Parse and validate a program");
  std::string program_path;
  bool safe = false;
  check_cmd->add_option("program", program_path, "Program file")->required();
  check_cmd->add_flag("--safe", safe, "Require head variables to occur in rule bodies");

  auto* query_cmd = app.add_subcommand("query", "Answer a query top-down; reads queries from stdin if none given");
  std::string query_text;
  QueryFlags qf;
  query_cmd->add_option("program", program_path, "Program file")->required();
  query_cmd->add_option("query", query_text, "Query such as \"?- p(X).\"");
  query_cmd->add_option("--depth", qf.depth, "Maximum derivation length")->capture_default_str();
  query_cmd->add_option("--threshold", qf.threshold, "Only look for answers at least this true");
  query_cmd->add_flag("--best", qf.best, "Keep the best answer per substitution");
  query_cmd->add_flag("--exhaustive", qf.exhaustive, "Try clauses in declaration order");
  query_cmd->add_flag("--trace", qf.trace, "Print every derivation step");

  auto* model_cmd = app.add_subcommand("model", "Compute the least Herbrand model bottom-up");
  std::string model_query;
  std::size_t max_ground = GroundOptions{}.max_instances;
  model_cmd->add_option("program", program_path, "Program file")->required();
  model_cmd->add_option("query", model_query, "Only print instances of this atom");
  model_cmd->add_option("--max-ground", max_ground, "Cap on ground instances")->capture_default_str();

  auto* surface_cmd = app.add_subcommand("surface", "Goodness surface of a fuzzy control rule system");
  std::string control_path;
  bool lukasiewicz = false;
  surface_cmd->add_option("system", control_path, "Control system file")->required();
  surface_cmd->add_flag("--lukasiewicz", lukasiewicz, "Use the Lukasiewicz implication for the rules");
  bool show_program = false;
  surface_cmd->add_flag("--program", show_program, "Print the compiled program as well");

  auto* compile_cmd = app.add_subcommand("compile", "Translate a program to Prolog clauses");
  std::string compile_query_text;
  compile_cmd->add_option("program", program_path, "Program file")->required();
  compile_cmd->add_option("query", compile_query_text, "Query to translate into a goal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "fllp: " << e.what() << "\n";
    return kFailure;
  }

  try {
    if (*domain_cmd) {
      TruthTables truth = resolve_truth(settings, std::nullopt, {});
      const auto& d = truth->domain();
      std::ostringstream text;
      for (std::uint32_t i = 0; i < d.size(); ++i) text << "v" << i << " = " << d.name(Degree{i}) << "\n";
      if (show_inverse) {
        const auto& a = d.algebra();
        text << "\ninverse mappings\n";
        for (std::uint32_t i = 0; i < d.size(); ++i) {
          text << "v" << i;
          for (std::size_t h = 0; h < a.hedge_count(); ++h) {
            HedgeId id{static_cast<std::uint16_t>(h)};
            text << "  " << a.hedge(id).name << "^-=v" << truth->apply(id, Degree{i}).index;
          }
          text << "\n";
        }
      }
      write_output(settings, text.str(), out);
      return kOk;
    }

    if (*surface_cmd) {
      TruthTables truth = resolve_truth(settings, std::nullopt, {});
      auto cs = parse_control(read_file(control_path), truth);
      auto program = compile_control(cs, lukasiewicz ? Implication::Lukasiewicz : Implication::Godel);
      std::string text;
      if (show_program) text += format_program(program) + "\n";
      text += format_surface(goodness_surface(cs, program), truth->domain());
      write_output(settings, text, out);
      return kOk;
    }

    Program program = load_program(settings, program_path);

    if (*check_cmd) {
      auto diags = validate_program(program, ValidationOptions{safe});
      for (const auto& d : diags) err << program_path << ":" << format_diagnostic(d) << "\n";
      if (!diags.empty()) return kFailure;
      out << "ok: " << program.rules.size() << " rule(s), " << program.facts.size() << " fact(s)\n";
      return kOk;
    }

    auto diags = validate_program(program);
    if (!diags.empty()) {
      for (const auto& d : diags) err << program_path << ":" << format_diagnostic(d) << "\n";
      return kFailure;
    }

    if (*compile_cmd) {
      std::string text = compile_program(program);
      if (!compile_query_text.empty()) text += "\n" + compile_query(parse_query(compile_query_text)) + "\n";
      write_output(settings, text, out);
      return kOk;
    }

    if (*model_cmd) {
      GroundOptions go;
      go.max_instances = max_ground;
      std::optional<Atom> query;
      if (!model_query.empty()) {
        query = parse_query(model_query);
        for (const auto& t : query->args) {
          if (!t.is_variable()) go.extra_constants.push_back(t.name);
        }
      }
      auto gp = ground(program, go);
      auto lm = least_model(gp, FixpointMode::Delta);
      std::string text;
      if (!query) {
        text = dump_model(gp, lm.model);
      } else {
        for (const auto& a : query_model(gp, lm.model, *query)) {
          text += answer_line(format_substitution(a.bindings), a.tv, program.domain()) + "\n";
        }
        if (text.empty()) text = "no answers\n";
      }
      write_output(settings, text, out);
      return kOk;
    }

    if (*query_cmd) {
      if (!query_text.empty()) {
        std::ostringstream text;
        bool limited = run_query(program, query_text, qf, settings.out_path.empty() ? out : text, err);
        if (!settings.out_path.empty()) write_output(settings, text.str(), out);
        return limited ? kLimit : kOk;
      }
      bool interactive = &in == &std::cin && isatty(fileno(stdin));
      std::string line;
      for (;;) {
        if (interactive) out << "?- " << std::flush;
        if (!std::getline(in, line)) break;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '%') continue;
        if (line.compare(first, 4, "quit") == 0 || line.compare(first, 4, "halt") == 0) break;
        std::string q = line.substr(first);
        try {
          run_query(program, q, qf, out, err);
        } catch (const Error& e) {
          err << "error: " << e.what() << "\n";
        }
      }
      return kOk;
    }
  } catch (const ResourceError& e) {
    err << "fllp: " << e.what() << "\n";
    return kLimit;
  } catch (const AlgebraError& e) {
    err << "fllp: " << e.what() << "\n";
    return kFailure;
  } catch (const ParseError& e) {
    err << "fllp: " << e.what() << "\n";
    return kFailure;
  } catch (const Error& e) {
    err << "fllp: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace fllp::cli
