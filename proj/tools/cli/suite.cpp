#include <random>

#include "cli/app.hpp"
#include "qpoly/errors.hpp"
#include "qpoly/graphs/analysis.hpp"
#include "qpoly/tridiag/system.hpp"

namespace qpoly::cli {

namespace {

using exact::Rational;
using exact::Real;

struct Failure {
  std::string kind;
  int index;
  std::string what;
};

bool part2_holds(const tridiag::Part2Result& r, bool& equality) {
  bool ok = r.consistent && !r.branches.empty();
  equality = false;
  for (const auto& b : r.branches) {
    ok = ok && b.ineq.holds;
    equality = equality || b.ineq.equality;
  }
  // Both branches must sit on the side fixed by the comparison.
  if (r.comparison > 0) ok = ok && r.branches.size() == 1 && r.branches[0].branch == "ge";
  if (r.comparison < 0) ok = ok && r.branches.size() == 1 && r.branches[0].branch == "le";
  if (r.comparison == 0) ok = ok && r.branches.size() == 2;
  return ok;
}

std::vector<std::string> check_one(const tridiag::TridiagonalSystem& s) {
  std::vector<std::string> bad;
  const int d = s.diameter();
  if (!tridiag::validate(s).valid) bad.push_back("generator produced an invalid system");
  const auto r = tridiag::spectrum(s);
  const auto cp = exact::berkowitz_charpoly(tridiag::reduced_matrix(s));
  const auto& fd = r.f_polys.back();
  bool same = static_cast<int>(cp.size()) == fd.degree() + 1;
  for (int i = 0; same && i <= fd.degree(); ++i) same = cp[static_cast<std::size_t>(i)] == Real(fd.coeff(i));
  if (!same) bad.push_back("F_D differs from the characteristic polynomial of the reduced matrix");
  if (d >= 2 && r.f_polys[2](Rational(-1)) != -s.beta[1].rational())
    bad.push_back("F_2(-1) != -beta_1");
  const auto il = tridiag::interlacing_check(r);
  if (!il.pass) bad.push_back("interlacing: " + il.witness);
  const auto p1 = tridiag::thm1_part1(s, r);
  if (!p1.ineq.holds) bad.push_back("two-factor bound fails");
  if (p1.ineq.equality != (d == 2)) bad.push_back("two-factor equality does not match D = 2");
  if (d >= 3) {
    bool eq = false;
    if (!part2_holds(tridiag::thm1_part2(s, r), eq)) bad.push_back("three-factor bound fails or wrong branch");
    if (eq != (d == 3)) bad.push_back("three-factor equality does not match D = 3");
  }
  return bad;
}

}  // namespace

Outcome property_suite(const SuiteConfig& cfg) {
  if (cfg.systems < 0 || cfg.graphs < 0) throw DomainError("suite sizes must be nonnegative");
  if (cfg.min_diameter < 2 || cfg.max_diameter < cfg.min_diameter) throw DomainError("bad diameter range");
  Outcome o;
  std::vector<Failure> failures;
  tridiag::RandomSystems gen(cfg.seed);
  const int span = cfg.max_diameter - cfg.min_diameter + 1;
  std::vector<int> per_d(static_cast<std::size_t>(span), 0);
  for (int i = 0; i < cfg.systems; ++i) {
    const int d = cfg.min_diameter + i % span;
    ++per_d[static_cast<std::size_t>(i % span)];
    auto bad = check_one(gen.next(d));
    if (cfg.inject_fault && i == 0) bad.push_back("two-factor bound fails (injected)");
    for (auto& b : bad) failures.push_back({"system", i, std::move(b)});
  }

  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  int graphs_checked = 0;
  for (int i = 0; i < cfg.graphs; ++i) {
    const int n = 6 + static_cast<int>(rng() % 11);
    int k = 2 + static_cast<int>(rng() % 4);
    if (k > n - 2) k = n - 2;
    if ((n * k) % 2) --k;
    const auto g = graphs::random_regular(n, k, rng());
    const auto spec = graphs::spectrum_graph(g);
    const auto reg = graphs::classify_regularity(g);
    for (int x = 0; x < n; ++x) {
      auto il = graphs::interlace_check(g, x, spec);
      if (!il.pass) failures.push_back({"graph", i, "interlacing at vertex " + std::to_string(x) + ": " + il.witness});
    }
    const auto kp = graphs::kpy_check(g, spec, reg);
    if (!kp.all_hold) failures.push_back({"graph", i, "vertex bound fails"});
    if (!kp.consistent) failures.push_back({"graph", i, "equality everywhere disagrees with strong regularity"});
    if (reg.distance_regular && reg.diameter >= 3) {
      bool eq = false;
      if (!part2_holds(graphs::thm31_check(g), eq)) failures.push_back({"graph", i, "three-factor bound fails"});
    }
    ++graphs_checked;
  }

  Json& j = o.report;
  j["command"] = "property-suite";
  j["seed"] = cfg.seed;
  Json dj = Json::object();
  for (int t = 0; t < span; ++t) dj[std::to_string(cfg.min_diameter + t)] = per_d[static_cast<std::size_t>(t)];
  j["systems"] = Json{{"count", cfg.systems}, {"by_diameter", dj}};
  j["graphs"] = Json{{"count", graphs_checked}};
  Json fj = Json::array();
  for (const auto& f : failures) {
    fj.push_back(Json{{"kind", f.kind}, {"index", f.index}, {"what", f.what},
                      {"reproducer", Json{{"seed", cfg.seed}, {"index", f.index}}}});
    o.alarms.push_back(f.kind + " " + std::to_string(f.index) + ": " + f.what);
  }
  j["failures"] = fj;
  j["alarms"] = o.alarms;
  j["verdict"] = o.alarms.empty() ? "verified" : "alarm";
  return o;
}

}  // namespace qpoly::cli
