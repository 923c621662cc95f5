#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qpoly/exact/rational.hpp"
#include "qpoly/report/json.hpp"
#include "qpoly/schemes/qpoly.hpp"

namespace qpoly::scanner {

using exact::Rational;

/// Class-3 Krein array {m, b1*, b2*; 1, c2*, c3*}; c3* = m unless the
/// scan frees it.
struct Candidate {
  Rational m, b1, b2, c2, c3;
};

struct ScanConfig {
  Rational m_min = 1;
  Rational m_max = 10;
  /// Grid step for m, b1*, b2*, c2* (and c3* in free mode).
  Rational step = 1;
  /// Require m3 to be an integer.
  bool integral = false;
  /// Let c3* range over the grid instead of fixing it to m.
  bool free_c3 = false;
  /// Reject arrays with a negative Krein parameter.
  bool krein = true;
};

enum class Filter { condition, multiplicity, krein, thm41, dual_bound };
const char* filter_name(Filter f);
inline constexpr Filter kFilters[] = {Filter::condition, Filter::multiplicity, Filter::krein, Filter::thm41, Filter::dual_bound};

struct CandidateResult {
  Candidate c;
  std::vector<Rational> a_star;  // a*_0..a*_3
  Rational m3;
  /// First failed filter; empty for survivors.
  std::optional<Filter> rejected_at;
  std::string reason;
  std::optional<schemes::Thm41Result> thm41;
  std::optional<schemes::DualBound> bound;
  std::optional<schemes::AuditReport> audit;
  /// The tridiagonal bound failed on an array with every a*_i >= 0.
  bool alarm = false;
  bool survived() const { return !rejected_at.has_value(); }
  bool dual_tight() const { return bound && bound->dual_tight; }
};

struct ScanSummary {
  long candidates = 0;
  long rejected[5] = {0, 0, 0, 0, 0};
  long survivors = 0;
  long dual_tight = 0;
  long dual_tight_b2star_is_1 = 0;
  long dual_tight_b1star_eq_c2star = 0;
  long audit_failures = 0;
  long a3_findings = 0;
  long alarms = 0;
};

/// Candidates in lexicographic order of (m, b1*, b2*, c2*, c3*).
/// Throws DomainError for an empty or malformed grid.
std::vector<Candidate> grid(const ScanConfig& cfg);

CandidateResult evaluate(const Candidate& c, bool integral, bool krein = true);

/// Runs every grid candidate through the filters in order, calling `sink`
/// for each result in grid order.
ScanSummary scan(const ScanConfig& cfg, const std::function<void(const CandidateResult&)>& sink);

report::Json to_json(const CandidateResult& r);
report::Json to_json(const ScanSummary& s);

}  // namespace qpoly::scanner
