#include "cli/app.hpp"
#include "qpoly/errors.hpp"
#include "qpoly/families/linked.hpp"
#include "qpoly/graphs/analysis.hpp"
#include "qpoly/schemes/qpoly.hpp"

namespace qpoly::cli {

namespace {

using exact::Rational;
using exact::Real;

Json skipped(const std::string& why) { return Json{{"skipped", why}}; }

bool wants(const std::string& theorem, const char* name) { return theorem == "all" || theorem == name; }

bool part2_ok(const tridiag::Part2Result& r) {
  bool ok = r.consistent;
  for (const auto& b : r.branches) ok = ok && b.ineq.holds;
  return ok;
}

// Theorem checks shared by scheme orderings and Krein arrays. `genuine`
// is false for parameter-level input, where only the tridiagonal bound is
// a theorem.
Json check_structure(const schemes::QPolyStructure& qs, const std::string& theorem, bool genuine, std::vector<std::string>& alarms,
                     std::vector<std::string>& findings) {
  Json j{{"structure", report::to_json(qs)}};
  const std::string tag = qs.from_parameters() ? std::string("array") : "ordering " + Json(qs.ordering).dump();
  try {
    j["spectrum"] = report::to_json(schemes::b1star_spectrum(qs));
    j["spectral_identity"] = true;
  } catch (const SemanticError& e) {
    j["spectral_identity"] = false;
    alarms.push_back(tag + ": " + e.what());
  }
  if (wants(theorem, "thm41")) {
    auto t = schemes::thm41_check(qs);
    j["thm41"] = report::to_json(t);
    if (!t.part1.ineq.holds || !t.part1.consistent || (t.part2 && !part2_ok(*t.part2)))
      alarms.push_back(tag + ": tridiagonal bound on B1* failed");
  }
  auto bound = schemes::dual_fundamental_bound(qs);
  if (wants(theorem, "thm51") || wants(theorem, "fundamental")) {
    j["dual_bound"] = report::to_json(bound);
    if (genuine && !bound.holds) alarms.push_back(tag + ": dual fundamental bound failed");
  }
  if (wants(theorem, "thm51") && qs.d() == 3 && bound.dual_tight) {
    auto audit = schemes::class3_dualtight_audit(qs);
    j["audit"] = report::to_json(audit);
    if (audit.a3_finding) findings.push_back(tag + ": dual-tight with a3* != 0");
    if (genuine && !audit.a3_finding && !audit.all_pass) alarms.push_back(tag + ": dual-tight audit failed");
  }
  return j;
}

void finish(Outcome& o, const std::vector<std::string>& findings) {
  o.report["alarms"] = o.alarms;
  o.report["findings"] = findings;
  o.report["verdict"] = o.alarms.empty() ? "verified" : "alarm";
}

}  // namespace

Outcome check_graph(const graphs::Graph& g, const std::string& theorem) {
  if (theorem != "all" && theorem != "kpy" && theorem != "thm31" && theorem != "fundamental")
    throw DomainError("theorem " + theorem + " does not apply to graphs");
  Outcome o;
  Json& j = o.report;
  j["command"] = "check-graph";
  j["graph"] = Json{{"n", g.order()}, {"edges", g.size()}, {"graph6", graphs::emit_graph6(g)}};
  const auto reg = graphs::classify_regularity(g);
  j["regularity"] = report::to_json(reg);
  if (!reg.connected) throw DomainError("graph is not connected");
  const auto spec = graphs::spectrum_graph(g);
  j["spectrum"] = report::to_json(spec);

  if (reg.degree) {
    Json fails = Json::array();
    for (int x = 0; x < g.order(); ++x) {
      auto r = graphs::interlace_check(g, x, spec);
      if (!r.pass) fails.push_back(Json{{"vertex", x}, {"witness", r.witness}});
    }
    j["interlace"] = Json{{"pass", fails.empty()}, {"failures", fails}};
    if (!fails.empty()) o.alarms.push_back("quotient eigenvalues do not interlace");
  } else {
    j["interlace"] = skipped("graph is not regular");
  }

  if (wants(theorem, "kpy")) {
    try {
      auto k = graphs::kpy_check(g, spec, reg);
      j["kpy"] = report::to_json(k);
      if (!k.all_hold) o.alarms.push_back("vertex bound failed");
      if (!k.consistent) o.alarms.push_back("equality at every vertex disagrees with strong regularity");
    } catch (const DomainError& e) {
      j["kpy"] = skipped(e.what());
    }
  }

  if (reg.distance_regular) {
    const auto arr = graphs::intersection_array(g);
    j["intersection_array"] = report::to_json(arr);
    const auto sys = arr.system();
    for (int x = 0; x < g.order(); ++x) {
      auto q = graphs::quotient_matrix(g, graphs::bfs_partition(g, x));
      for (std::size_t i = 0; i < q.alpha.size(); ++i)
        if (Real(q.alpha[i]) != sys.alpha[i] || Real(q.beta[i]) != sys.beta[i] || Real(q.gamma[i]) != sys.gamma[i]) {
          o.alarms.push_back("quotient at vertex " + std::to_string(x) + " differs from the intersection array");
          x = g.order();
          break;
        }
    }
    if (wants(theorem, "thm31")) {
      if (arr.diameter() >= 3) {
        auto t = graphs::thm31_check(g);
        j["thm31"] = report::to_json(t);
        if (!part2_ok(t)) o.alarms.push_back("three-factor bound failed");
      } else {
        j["thm31"] = skipped("diameter below 3");
      }
    }
    if (wants(theorem, "fundamental")) {
      auto f = graphs::fundamental_bound(arr, spec, reg.bipartite);
      j["fundamental_bound"] = report::to_json(f);
      if (!f.holds) o.alarms.push_back("fundamental bound failed");
    }
  } else {
    j["intersection_array"] = nullptr;
    if (wants(theorem, "thm31")) j["thm31"] = skipped("not distance-regular");
    if (wants(theorem, "fundamental")) j["fundamental_bound"] = skipped("not distance-regular");
  }
  finish(o, {});
  return o;
}

Outcome check_scheme(const schemes::AssociationScheme& s, const std::string& theorem) {
  if (theorem != "all" && theorem != "thm41" && theorem != "thm51" && theorem != "fundamental")
    throw DomainError("theorem " + theorem + " does not apply to schemes");
  Outcome o;
  std::vector<std::string> findings;
  Json& j = o.report;
  j["command"] = "check-scheme";
  Json valencies = Json::array();
  for (const auto& k : s.valencies()) valencies.push_back(k.get_str());
  j["scheme"] = Json{{"n", s.n}, {"class", s.d}, {"valencies", valencies}};
  const auto v = schemes::verify_scheme(s);
  j["axioms"] = report::to_json(v);
  if (!v.valid) throw SemanticError(v.violations.front(), v.violations.front().substr(0, v.violations.front().find(':')));
  const auto e = schemes::eigendata(s);
  j["eigendata"] = report::to_json(e);
  const auto kt = schemes::krein(e);
  const auto kr = schemes::check_krein(kt);
  j["krein"] = report::to_json(kr);
  if (!kr.nonnegative || !kr.symmetric || !kr.identity_row) o.alarms.push_back("Krein table violates its axioms");
  const auto qs = schemes::find_q_orderings(e, kt);
  j["q_polynomial"] = !qs.empty();
  Json ords = Json::array();
  for (const auto& q : qs) ords.push_back(check_structure(q, theorem, true, o.alarms, findings));
  j["orderings"] = ords;
  if (qs.empty()) j["note"] = "no Q-polynomial ordering";
  if (wants(theorem, "thm51") && s.d == 3 && !qs.empty()) {
    auto t = schemes::thm51_classify(s, qs);
    Json tj = report::to_json(t);
    tj.erase("orderings");
    j["thm51"] = tj;
    if (!t.consistent) o.alarms.push_back("dual-tightness disagrees with the symmetric-design search");
  }
  finish(o, findings);
  return o;
}

Outcome check_krein_array(const families::KreinArray& k, const std::string& theorem) {
  if (theorem != "all" && theorem != "thm41" && theorem != "thm51" && theorem != "fundamental")
    throw DomainError("theorem " + theorem + " does not apply to Krein arrays");
  Outcome o;
  std::vector<std::string> findings;
  Json& j = o.report;
  j["command"] = "check-scheme";
  j["krein_array"] = Json::parse(families::emit_json_krein(k));
  const auto qs = schemes::from_krein_array(k.b_star, k.c_star);
  const auto kr = schemes::check_krein(qs.krein);
  j["krein"] = report::to_json(kr);
  Json mult = Json::array();
  for (std::size_t u = 0; u < qs.krein.q.size(); ++u) mult.push_back(report::exact(qs.krein.q[u][u][0]));
  j["multiplicities"] = mult;
  j["orderings"] = Json::array({check_structure(qs, theorem, false, o.alarms, findings)});
  j["note"] = "parameter-level input: primal-side checks disabled";
  finish(o, findings);
  return o;
}

Outcome check_linked(int t) {
  Outcome o;
  std::vector<std::string> findings;
  Json& j = o.report;
  j["command"] = "check-scheme";
  const auto p = families::cameron_goethals(t);
  j["linked_system"] = Json{{"t", t}, {"l", p.l}, {"v", p.v}, {"k", p.k}, {"lambda", p.lambda}};
  const auto e = schemes::eigendata_from_p(families::linked_system_eigenmatrix(p));
  j["eigendata"] = report::to_json(e);
  const auto kt = schemes::krein(e);
  const auto kr = schemes::check_krein(kt);
  j["krein"] = report::to_json(kr);
  if (!kr.nonnegative) o.alarms.push_back("Krein table violates its axioms");
  const auto qs = schemes::find_q_orderings(e, kt);
  Json ords = Json::array();
  const Rational f(p.l + 1);
  for (const auto& q : qs) {
    Json oj = check_structure(q, "all", true, o.alarms, findings);
    auto r = schemes::thm41_check(q);
    const Real ratio = r.part1.ineq.lhs.value() / r.part1.ineq.rhs.value();
    oj["ratio"] = Json{{"value", report::exact(ratio)}, {"f", report::exact(f)}, {"expected", report::exact(Rational(f / (f - 1)))}};
    if (ratio != Real(Rational(f / (f - 1)))) o.alarms.push_back("ratio differs from f/(f-1)");
    ords.push_back(std::move(oj));
  }
  j["orderings"] = ords;
  if (qs.empty()) o.alarms.push_back("linked system has no Q-polynomial ordering");
  finish(o, findings);
  return o;
}

Outcome check_system(const tridiag::TridiagonalSystem& s) {
  Outcome o;
  Json& j = o.report;
  j["command"] = "check-system";
  const auto v = tridiag::validate(s);
  j["validation"] = report::to_json(v);
  if (!v.valid) throw SemanticError(v.violations.front(), v.violations.front().substr(0, v.violations.front().find(':')));
  const auto r = tridiag::spectrum(s);
  j["spectrum"] = report::to_json(r);
  const auto il = tridiag::interlacing_check(r);
  j["interlacing"] = Json{{"pass", il.pass}, {"witness", il.witness}};
  if (!il.pass) o.alarms.push_back("root interlacing failed");
  const auto p1 = tridiag::thm1_part1(s, r);
  j["part1"] = report::to_json(p1);
  if (!p1.ineq.holds || !p1.consistent) o.alarms.push_back("two-factor bound failed");
  if (s.diameter() >= 3) {
    const auto p2 = tridiag::thm1_part2(s, r);
    j["part2"] = report::to_json(p2);
    if (!part2_ok(p2)) o.alarms.push_back("three-factor bound failed");
  }
  finish(o, {});
  return o;
}

}  // namespace qpoly::cli
