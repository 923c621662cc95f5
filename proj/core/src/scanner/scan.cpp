#include "qpoly/scanner/scan.hpp"

#include "qpoly/errors.hpp"

namespace qpoly::scanner {

const char* filter_name(Filter f) {
  switch (f) {
    case Filter::condition: return "condition";
    case Filter::multiplicity: return "multiplicity";
    case Filter::krein: return "krein";
    case Filter::thm41: return "thm41";
    case Filter::dual_bound: return "dual_bound";
  }
  return "";
}

std::vector<Candidate> grid(const ScanConfig& cfg) {
  if (cfg.step <= 0) throw DomainError("grid step must be positive");
  if (cfg.m_min <= 0 || cfg.m_max < cfg.m_min) throw DomainError("empty grid: need 0 < m_min <= m_max");
  const Rational span = (cfg.m_max - cfg.m_min) / cfg.step;
  if (span > 400 || cfg.m_max / cfg.step > 400) throw DomainError("grid too large");
  std::vector<Candidate> out;
  for (Rational m = cfg.m_min; m <= cfg.m_max; m += cfg.step)
    for (Rational b1 = cfg.step; b1 <= m; b1 += cfg.step)
      for (Rational b2 = cfg.step; b2 <= m; b2 += cfg.step)
        for (Rational c2 = cfg.step; c2 <= m; c2 += cfg.step) {
          if (!cfg.free_c3) {
            out.push_back({m, b1, b2, c2, m});
            continue;
          }
          for (Rational c3 = cfg.step; c3 <= m; c3 += cfg.step) out.push_back({m, b1, b2, c2, c3});
        }
  if (out.empty()) throw DomainError("empty grid");
  return out;
}

CandidateResult evaluate(const Candidate& c, bool integral, bool krein) {
  CandidateResult r;
  r.c = c;
  r.a_star = {Rational(0), c.m - c.b1 - 1, c.m - c.b2 - c.c2, c.m - c.c3};
  r.m3 = c.m * c.b1 * c.b2 / (c.c2 * c.c3);
  auto reject = [&](Filter f, std::string why) {
    r.rejected_at = f;
    r.reason = std::move(why);
    return r;
  };
  for (std::size_t i = 1; i < 4; ++i)
    if (r.a_star[i] < 0) return reject(Filter::condition, "a*_" + std::to_string(i) + " < 0");
  if (r.m3 <= 0) return reject(Filter::multiplicity, "m3 <= 0");
  if (integral && !exact::is_integer(r.m3)) return reject(Filter::multiplicity, "m3 not an integer");

  const auto qs = schemes::from_krein_array({c.m, c.b1, c.b2}, {Rational(1), c.c2, c.c3});
  if (krein) {
    auto kr = schemes::check_krein(qs.krein);
    if (!kr.nonnegative) return reject(Filter::krein, kr.violations.front());
  }
  r.thm41 = schemes::thm41_check(qs);
  bool ok = r.thm41->part1.ineq.holds && r.thm41->part1.consistent;
  if (r.thm41->part2) {
    ok = ok && r.thm41->part2->consistent;
    for (const auto& b : r.thm41->part2->branches) ok = ok && b.ineq.holds;
  }
  if (!ok) {
    r.alarm = true;
    return reject(Filter::thm41, "tridiagonal bound failed");
  }
  r.bound = schemes::dual_fundamental_bound(qs);
  if (!r.bound->holds) return reject(Filter::dual_bound, "dual fundamental bound violated");
  if (r.bound->dual_tight) r.audit = schemes::class3_dualtight_audit(qs);
  return r;
}

ScanSummary scan(const ScanConfig& cfg, const std::function<void(const CandidateResult&)>& sink) {
  ScanSummary s;
  for (const auto& c : grid(cfg)) {
    CandidateResult r = evaluate(c, cfg.integral, cfg.krein);
    ++s.candidates;
    if (r.alarm) ++s.alarms;
    if (r.rejected_at) {
      ++s.rejected[static_cast<int>(*r.rejected_at)];
    } else {
      ++s.survivors;
      if (r.dual_tight()) {
        ++s.dual_tight;
        if (r.audit->b2star_is_1) ++s.dual_tight_b2star_is_1;
        if (r.audit->b1star_eq_c2star) ++s.dual_tight_b1star_eq_c2star;
        if (!r.audit->all_pass) ++s.audit_failures;
        if (r.audit->a3_finding) ++s.a3_findings;
      }
    }
    sink(r);
  }
  return s;
}

report::Json to_json(const CandidateResult& r) {
  using report::exact;
  report::Json a = report::Json::array();
  for (const auto& x : r.a_star) a.push_back(exact(x));
  report::Json filters = report::Json::object();
  bool passed = true;
  for (Filter f : kFilters) {
    if (r.rejected_at && *r.rejected_at == f) {
      filters[filter_name(f)] = false;
      passed = false;
    } else {
      filters[filter_name(f)] = passed ? report::Json(true) : report::Json(nullptr);
    }
  }
  report::Json j{{"m", exact(r.c.m)},   {"b1_star", exact(r.c.b1)}, {"b2_star", exact(r.c.b2)},
                 {"c2_star", exact(r.c.c2)}, {"c3_star", exact(r.c.c3)}, {"a_star", a},
                 {"m3", exact(r.m3)},   {"filters", filters},        {"survived", r.survived()},
                 {"dual_tight", r.dual_tight()}, {"alarm", r.alarm}};
  j["rejected_at"] = r.rejected_at ? report::Json(filter_name(*r.rejected_at)) : report::Json(nullptr);
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.thm41) j["thm41"] = report::to_json(*r.thm41);
  if (r.bound) j["dual_bound"] = report::to_json(*r.bound);
  if (r.audit) j["audit"] = report::to_json(*r.audit);
  return j;
}

report::Json to_json(const ScanSummary& s) {
  report::Json rej = report::Json::object();
  for (Filter f : kFilters) rej[filter_name(f)] = s.rejected[static_cast<int>(f)];
  return report::Json{{"candidates", s.candidates},
                      {"rejected", rej},
                      {"survivors", s.survivors},
                      {"dual_tight", s.dual_tight},
                      {"dual_tight_b2star_is_1", s.dual_tight_b2star_is_1},
                      {"dual_tight_b1star_eq_c2star", s.dual_tight_b1star_eq_c2star},
                      {"audit_failures", s.audit_failures},
                      {"a3_findings", s.a3_findings},
                      {"alarms", s.alarms}};
}

}  // namespace qpoly::scanner
