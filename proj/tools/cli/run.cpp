#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cli/app.hpp"
#include "qpoly/errors.hpp"
#include "qpoly/exact/number_field.hpp"
#include "qpoly/families/builders.hpp"
#include "qpoly/families/corpus.hpp"
#include "qpoly/graphs/analysis.hpp"
#include "qpoly/scanner/scan.hpp"

namespace qpoly::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool is_graph6_path(const std::string& path) {
  return path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0;
}

graphs::Graph load_graph(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  const bool g6 = format.empty() ? is_graph6_path(path) : format == "graph6";
  return g6 ? graphs::parse_graph6(text) : graphs::parse_json_graph(text);
}

exact::Rational parse_rational(const std::string& s, const char* field) {
  try {
    exact::Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational number: " + s, ParseError::npos, field);
  }
}

void emit_report(const Outcome& o, const std::string& output, std::ostream& out) {
  if (output == "json")
    out << o.report.dump(2) << "\n";
  else
    out << render_text(o.report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qpoly"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of eigenvalue bounds for distance-regular graphs and Q-polynomial schemes", "qpoly"};
  app.require_subcommand(1);
  std::string output = "text";
  long budget = 0;
  app.add_option("--output", output, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", budget, "Cap on interval refinement steps (0: unlimited)")->check(CLI::NonNegativeNumber);

  std::string theorem = "all", family, input, format;
  auto* graph = app.add_subcommand("check-graph", "Vertex, three-factor and fundamental bounds for a graph")->fallthrough();
  auto* g_family = graph->add_option("--family", family, "Named graph (see --list)");
  auto* g_input = graph->add_option("--input", input, "Graph file");
  g_family->excludes(g_input);
  graph->add_option("--format", format, "Input format")->check(CLI::IsMember({"graph6", "json"}));
  graph->add_option("--theorem", theorem)->check(CLI::IsMember({"kpy", "thm31", "fundamental", "all"}));
  bool list = false;
  graph->add_flag("--list", list, "List named graphs");

  std::string from_graph, krein_text;
  int linked = 0;
  auto* scheme = app.add_subcommand("check-scheme", "Krein conditions and Q-polynomial bounds for a scheme")->fallthrough();
  auto* s_graph = scheme->add_option("--from-graph", from_graph, "Distance scheme of a named graph");
  auto* s_krein = scheme->add_option("--krein", krein_text, "Krein array as JSON text");
  auto* s_input = scheme->add_option("--input", input, "Scheme, Krein array or graph file");
  auto* s_linked = scheme->add_option("--linked", linked, "Cameron-Goethals linked system with parameter t");
  s_graph->excludes(s_krein)->excludes(s_input)->excludes(s_linked);
  s_krein->excludes(s_input)->excludes(s_linked);
  s_input->excludes(s_linked);
  scheme->add_option("--theorem", theorem)->check(CLI::IsMember({"thm41", "thm51", "fundamental", "all"}));

  std::string system_graph;
  auto* system = app.add_subcommand("check-system", "Tridiagonal bounds for one system")->fallthrough();
  auto* y_input = system->add_option("--input", input, "System JSON file");
  auto* y_graph = system->add_option("--from-graph", system_graph, "Intersection matrix of a named graph");
  y_input->excludes(y_graph);

  SuiteConfig suite_cfg;
  auto* suite = app.add_subcommand("property-suite", "Randomized checks on tridiagonal systems and regular graphs")->fallthrough();
  suite->add_option("--seed", suite_cfg.seed);
  suite->add_option("--n", suite_cfg.systems, "Number of tridiagonal systems");
  suite->add_option("--graphs", suite_cfg.graphs, "Number of random regular graphs");
  suite->add_option("--min-d", suite_cfg.min_diameter);
  suite->add_option("--max-d", suite_cfg.max_diameter);
  suite->add_flag("--inject-fault", suite_cfg.inject_fault, "Flip one verdict to exercise the alarm path");

  std::string m_min = "1", m_max = "10", step = "1";
  bool integral = false, free_c3 = false, all = false, no_krein = false;
  auto* scan = app.add_subcommand("scan", "Filter class-3 Krein arrays on a rational grid")->fallthrough();
  scan->add_option("--m-min", m_min);
  scan->add_option("--m-max", m_max);
  scan->add_option("--step", step);
  scan->add_flag("--integral", integral, "Require an integral third multiplicity");
  scan->add_flag("--free-c3", free_c3, "Let c3* range over the grid");
  scan->add_flag("--all", all, "Emit rejected candidates too");
  scan->add_flag("--no-krein-filter", no_krein, "Skip the Krein nonnegativity filter");

  std::string write_dir, verify_dir;
  auto* corpus = app.add_subcommand("corpus", "Write or verify the example corpus")->fallthrough();
  auto* c_write = corpus->add_option("--write", write_dir);
  auto* c_verify = corpus->add_option("--verify", verify_dir);
  c_write->excludes(c_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (budget > 0) exact::set_refinement_budget(budget);
    Outcome o;
    if (graph->parsed()) {
      if (list) {
        for (const auto& n : families::graph_names()) out << n << "\n";
        return kOk;
      }
      if (family.empty() && input.empty()) throw ParseError("check-graph needs --family or --input");
      o = check_graph(family.empty() ? load_graph(input, format) : families::graph_by_name(family), theorem);
    } else if (scheme->parsed()) {
      if (!from_graph.empty()) {
        o = check_scheme(schemes::scheme_from_graph(families::graph_by_name(from_graph)), theorem);
      } else if (!krein_text.empty()) {
        o = check_krein_array(families::parse_json_krein(krein_text), theorem);
      } else if (*s_linked) {
        o = check_linked(linked);
      } else if (!input.empty()) {
        const std::string text = read_file(input);
        if (is_graph6_path(input)) {
          o = check_scheme(schemes::scheme_from_graph(graphs::parse_graph6(text)), theorem);
        } else {
          switch (families::sniff_json(text)) {
            case families::Format::json_scheme:
              o = check_scheme(families::parse_json_scheme(text), theorem);
              break;
            case families::Format::json_krein:
              o = check_krein_array(families::parse_json_krein(text), theorem);
              break;
            case families::Format::json_graph:
              o = check_scheme(schemes::scheme_from_graph(graphs::parse_json_graph(text)), theorem);
              break;
            default:
              throw ParseError("input is not a scheme, Krein array or graph");
          }
        }
      } else {
        throw ParseError("check-scheme needs --from-graph, --krein, --input or --linked");
      }
    } else if (system->parsed()) {
      if (!system_graph.empty())
        o = check_system(graphs::intersection_array(families::graph_by_name(system_graph)).system());
      else if (!input.empty())
        o = check_system(families::parse_json_system(read_file(input)));
      else
        throw ParseError("check-system needs --input or --from-graph");
    } else if (suite->parsed()) {
      o = property_suite(suite_cfg);
    } else if (scan->parsed()) {
      scanner::ScanConfig cfg;
      cfg.m_min = parse_rational(m_min, "m-min");
      cfg.m_max = parse_rational(m_max, "m-max");
      cfg.step = parse_rational(step, "step");
      cfg.integral = integral;
      cfg.free_c3 = free_c3;
      cfg.krein = !no_krein;
      const auto summary = scanner::scan(cfg, [&](const scanner::CandidateResult& r) {
        if (all || r.survived()) out << scanner::to_json(r).dump() << "\n";
      });
      out << Json{{"summary", scanner::to_json(summary)}}.dump() << "\n";
      return summary.alarms ? kAlarm : kOk;
    } else if (corpus->parsed()) {
      if (!write_dir.empty()) {
        families::write_corpus(write_dir);
        out << "wrote " << families::corpus().size() << " entries to " << write_dir << "\n";
        return kOk;
      }
      if (verify_dir.empty()) throw ParseError("corpus needs --write or --verify");
      bool ok = true;
      Json rows = Json::array();
      for (const auto& c : families::verify_corpus(verify_dir)) {
        ok = ok && c.file_matches && c.builder_matches;
        rows.push_back(Json{{"name", c.name}, {"file", c.file_matches}, {"builder", c.builder_matches},
                            {"expected", c.expected}, {"actual", c.actual}});
      }
      o.report = Json{{"command", "corpus"}, {"entries", rows}, {"verdict", ok ? "verified" : "mismatch"}};
      emit_report(o, output, out);
      return ok ? kOk : kInputError;
    }
    emit_report(o, output, out);
    return o.exit_code();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what();
    if (!e.field().empty()) err << " (field " << e.field() << ")";
    if (e.offset() != ParseError::npos) err << " (offset " << e.offset() << ")";
    err << "\n";
  } catch (const SemanticError& e) {
    err << "invalid input [" << e.clause() << "]: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "not applicable: " << e.what() << "\n";
  } catch (const BudgetExceeded& e) {
    err << "refinement budget exhausted: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace qpoly::cli
