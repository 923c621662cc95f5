#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qpoly/families/io.hpp"
#include "qpoly/graphs/graph.hpp"
#include "qpoly/report/json.hpp"
#include "qpoly/schemes/scheme.hpp"

namespace qpoly::cli {

using report::Json;

enum Exit { kOk = 0, kInputError = 1, kAlarm = 2 };

/// A report plus the soundness alarms raised while producing it. An alarm
/// means a theorem failed on a validated instance.
struct Outcome {
  Json report;
  std::vector<std::string> alarms;
  int exit_code() const { return alarms.empty() ? kOk : kAlarm; }
};

/// theorem is one of kpy, thm31, fundamental, all.
Outcome check_graph(const graphs::Graph& g, const std::string& theorem = "all");
/// theorem is one of thm41, thm51, all.
Outcome check_scheme(const schemes::AssociationScheme& s, const std::string& theorem = "all");
Outcome check_krein_array(const families::KreinArray& k, const std::string& theorem = "all");
/// Cameron-Goethals linked system at parameter level.
Outcome check_linked(int t);
Outcome check_system(const tridiag::TridiagonalSystem& s);

struct SuiteConfig {
  std::uint64_t seed = 1;
  int systems = 1000;
  int graphs = 40;
  int min_diameter = 2;
  int max_diameter = 6;
  /// Reverses one inequality verdict to exercise the alarm path.
  bool inject_fault = false;
};
Outcome property_suite(const SuiteConfig& cfg);

/// Indented plain-text rendering of a report.
std::string render_text(const Json& j);

/// Parses and runs a command line; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qpoly::cli
