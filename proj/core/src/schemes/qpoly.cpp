#include "qpoly/schemes/qpoly.hpp"

#include <algorithm>

#include "qpoly/errors.hpp"
#include "qpoly/exact/algebraic_real.hpp"
#include "qpoly/graphs/analysis.hpp"

namespace qpoly::schemes {

namespace {

std::vector<Real> descending(std::vector<Real> v) {
  std::sort(v.begin(), v.end(), [](const Real& a, const Real& b) { return a > b; });
  return v;
}

// Reads the dual intersection numbers off the columns of B1*.
void read_dual_params(QPolyStructure& qs) {
  const auto m = qs.b1star.rows();
  qs.a_star.assign(m, Real(0));
  qs.b_star.assign(m, Real(0));
  qs.c_star.assign(m, Real(0));
  for (std::size_t i = 0; i < m; ++i) {
    qs.a_star[i] = qs.b1star(i, i);
    if (i + 1 < m) qs.b_star[i] = qs.b1star(i + 1, i);
    if (i > 0) qs.c_star[i] = qs.b1star(i - 1, i);
  }
}

bool irreducible_tridiagonal(const Matrix<Real>& b) {
  const auto m = b.rows();
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      const std::size_t dist = r > c ? r - c : c - r;
      if (dist > 1 && !b(r, c).is_zero()) return false;
      if (dist == 1 && b(r, c).sign() <= 0) return false;
    }
  return true;
}

}  // namespace

std::vector<QPolyStructure> find_q_orderings(const EigenData& e, const KreinTable& t) {
  std::vector<QPolyStructure> out;
  const int d = e.d;
  const auto m = static_cast<std::size_t>(d + 1);
  for (int e1 = 1; e1 <= d; ++e1) {
    std::vector<int> ord{0, e1};
    std::vector<char> used(m, 0);
    used[0] = used[static_cast<std::size_t>(e1)] = 1;
    bool ok = true;
    for (int i = 1; i < d && ok; ++i) {
      int next = -1;
      for (int h = 0; h <= d; ++h) {
        if (used[static_cast<std::size_t>(h)] || t(e1, ord[static_cast<std::size_t>(i)], h).is_zero()) continue;
        if (next >= 0) {
          ok = false;
          break;
        }
        next = h;
      }
      if (next < 0) ok = false;
      if (!ok) break;
      used[static_cast<std::size_t>(next)] = 1;
      ord.push_back(next);
    }
    if (!ok) continue;
    QPolyStructure qs;
    qs.b1star = Matrix<Real>(m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) qs.b1star(r, c) = t(e1, ord[r], ord[c]);
    if (!irreducible_tridiagonal(qs.b1star)) continue;
    qs.ordering = ord;
    qs.m = e.m[static_cast<std::size_t>(e1)];
    read_dual_params(qs);
    for (std::size_t u = 0; u < m; ++u) qs.dual_by_relation.push_back(e.Q(u, static_cast<std::size_t>(e1)));
    qs.dual_eigenvalues = descending(qs.dual_by_relation);
    qs.relation_order_descending = true;
    for (std::size_t u = 0; u + 1 < m; ++u)
      if (!(qs.dual_by_relation[u] > qs.dual_by_relation[u + 1])) qs.relation_order_descending = false;
    if (qs.dual_eigenvalues.front() != qs.m)
      throw SemanticError("largest dual eigenvalue differs from m", "dual_spectrum");
    qs.krein.q.assign(m, std::vector<std::vector<Real>>(m, std::vector<Real>(m)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t h = 0; h < m; ++h) qs.krein.q[i][j][h] = t(ord[i], ord[j], ord[h]);
    out.push_back(std::move(qs));
  }
  return out;
}

KreinTable krein_from_array(const std::vector<Real>& a, const std::vector<Real>& b, const std::vector<Real>& c) {
  const auto m = a.size();
  if (m < 2 || b.size() != m || c.size() != m) throw DomainError("dual arrays must have D+1 entries each");
  Matrix<Real> l1(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    l1(i, i) = a[i];
    if (i + 1 < m) {
      l1(i, i + 1) = b[i];
      l1(i + 1, i) = c[i + 1];
    }
  }
  std::vector<Matrix<Real>> L{Matrix<Real>::identity(m), l1};
  for (std::size_t i = 1; i + 1 < m; ++i) {
    Matrix<Real> next = l1 * L[i];
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < m; ++s) {
        next(r, s) -= a[i] * L[i](r, s) + b[i - 1] * L[i - 1](r, s);
        next(r, s) /= c[i + 1];
      }
    L.push_back(std::move(next));
  }
  KreinTable t;
  t.q.assign(m, std::vector<std::vector<Real>>(m, std::vector<Real>(m)));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t h = 0; h < m; ++h) t.q[u][j][h] = L[u](h, j);
  return t;
}

QPolyStructure from_krein_array(const std::vector<Rational>& b_star, const std::vector<Rational>& c_star) {
  const std::size_t d = b_star.size();
  if (d < 2 || c_star.size() != d) throw SemanticError("Krein array needs D >= 2 entries on each side", "shape");
  if (b_star[0] <= 0) throw SemanticError("b*_0 = m must be positive", "kappa");
  if (c_star[0] != 1) throw SemanticError("c*_1 must equal 1", "gamma1");
  const Rational m = b_star[0];
  QPolyStructure qs;
  qs.m = m;
  qs.a_star.assign(d + 1, Real(0));
  qs.b_star.assign(d + 1, Real(0));
  qs.c_star.assign(d + 1, Real(0));
  for (std::size_t i = 0; i <= d; ++i) {
    const Rational b = i < d ? b_star[i] : Rational(0);
    const Rational c = i > 0 ? c_star[i - 1] : Rational(0);
    if (i < d && b <= 0) throw SemanticError("b*_" + std::to_string(i) + " must be positive", "beta_pos");
    if (i > 0 && c <= 0) throw SemanticError("c*_" + std::to_string(i) + " must be positive", "gamma_pos");
    const Rational a = m - b - c;
    if (a < 0) throw SemanticError("a*_" + std::to_string(i) + " would be negative", "alpha_nonneg");
    qs.a_star[i] = a;
    qs.b_star[i] = b;
    qs.c_star[i] = c;
  }
  qs.b1star = Matrix<Real>(d + 1, d + 1);
  Matrix<Rational> bq(d + 1, d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    qs.b1star(i, i) = qs.a_star[i];
    bq(i, i) = qs.a_star[i].rational();
    if (i + 1 <= d) {
      qs.b1star(i + 1, i) = qs.b_star[i];
      qs.b1star(i, i + 1) = qs.c_star[i + 1];
      bq(i + 1, i) = qs.b_star[i].rational();
      bq(i, i + 1) = qs.c_star[i + 1].rational();
    }
  }
  auto roots = exact::isolate_real_roots(exact::RationalPoly(exact::berkowitz_charpoly(bq)));
  if (roots.size() != d + 1) throw SemanticError("B1* does not have D+1 distinct real eigenvalues", "dual_spectrum");
  qs.dual_eigenvalues = descending(exact::to_reals(roots));
  if (qs.dual_eigenvalues.front() != qs.m) throw SemanticError("largest dual eigenvalue differs from m", "dual_spectrum");
  qs.krein = krein_from_array(qs.a_star, qs.b_star, qs.c_star);
  return qs;
}

tridiag::TridiagonalSystem b1star_system(const QPolyStructure& qs) {
  const int d = qs.d();
  std::vector<Real> beta(qs.b_star.begin(), qs.b_star.begin() + d);
  std::vector<Real> gamma(qs.c_star.begin() + 1, qs.c_star.end());
  auto s = tridiag::TridiagonalSystem::from_arrays(qs.m, qs.a_star, beta, gamma);
  tridiag::require_valid(s);
  return s;
}

tridiag::SpectrumReport b1star_spectrum(const QPolyStructure& qs) {
  auto s = b1star_system(qs);
  if (!s.is_rational()) return tridiag::spectrum_from(s, qs.dual_eigenvalues);
  auto r = tridiag::spectrum(s);
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i)
    if (exact::compare(r.eigenvalues[i], Expr(qs.dual_eigenvalues[i])) != 0)
      throw SemanticError("eigenvalues of B1* differ from the dual eigenvalues", "dual_spectrum");
  return r;
}

Thm41Result thm41_check(const QPolyStructure& qs) {
  if (qs.d() < 2) throw DomainError("class at least 2 required");
  auto s = b1star_system(qs);
  auto r = b1star_spectrum(qs);
  Thm41Result out{tridiag::thm1_part1(s, r), std::nullopt};
  if (qs.d() >= 3) out.part2 = tridiag::thm1_part2(s, r);
  return out;
}

DualBound dual_fundamental_bound(const QPolyStructure& qs) {
  const int d = qs.d();
  if (d < 1) throw DomainError("class at least 1 required");
  DualBound out;
  const Expr m(qs.m), a1(qs.a_star[1]), b1(qs.b_star[1]);
  const Expr shift = m / (a1 + 1);
  out.lhs = (Expr(qs.dual_eigenvalues[1]) + shift) * (Expr(qs.dual_eigenvalues[static_cast<std::size_t>(d)]) + shift);
  out.rhs = -(m * a1 * b1) / ((a1 + 1) * (a1 + 1));
  const int c = exact::compare(out.lhs, out.rhs);
  out.holds = c >= 0;
  out.equality = c == 0;
  out.q_bipartite = std::all_of(qs.a_star.begin(), qs.a_star.end(), [](const Real& a) { return a.is_zero(); });
  out.dual_tight = !out.q_bipartite && out.equality;
  return out;
}

namespace {

AuditRecord record(std::string name, const Real& lhs, const Real& rhs, const std::string& relation, std::string note = {}) {
  AuditRecord r{std::move(name), Expr(lhs), Expr(rhs), relation, false, std::move(note)};
  const int c = exact::compare(lhs, rhs);
  if (relation == "==") r.pass = c == 0;
  else if (relation == "!=") r.pass = c != 0;
  else if (relation == ">=") r.pass = c >= 0;
  else r.pass = c <= 0;
  return r;
}

}  // namespace

AuditReport class3_dualtight_audit(const QPolyStructure& qs) {
  if (qs.d() != 3) throw DomainError("the audit applies to class 3 only");
  AuditReport rep;
  auto& recs = rep.records;
  const Real& m = qs.m;
  const Real& b1 = qs.b_star[1];
  const Real& b2 = qs.b_star[2];
  const Real& c2 = qs.c_star[2];
  const Real& t1 = qs.dual_eigenvalues[1];
  const Real& t2 = qs.dual_eigenvalues[2];
  const Real& t3 = qs.dual_eigenvalues[3];
  const auto& q = qs.krein;

  recs.push_back(record("a1_star_nonzero", qs.a_star[1], Real(0), "!=", "a1* = m - b1* - 1 is a divisor below"));
  recs.push_back(record("a3_star_zero", qs.a_star[3], Real(0), "=="));
  rep.a3_finding = !recs.back().pass;
  recs.push_back(record("c3_star_eq_m", qs.c_star[3], m, "=="));

  const auto phi = exact::berkowitz_charpoly(qs.b1star);
  // (x - m)(x^3 + p2 x^2 + p1 x + p0)
  const Real p2 = -m + b1 + b2 + c2 + Real(1);
  const Real p1 = b1 * b2 + b2 + c2 - m * b2 - m;
  const Real p0 = -(m * b2);
  const std::vector<Real> expected{-m * p0, p0 - m * p1, p1 - m * p2, p2 - m, Real(1)};
  for (std::size_t i = 0; i < expected.size(); ++i)
    recs.push_back(record("phi_factorization_x" + std::to_string(i), phi[i], expected[i], "=="));

  recs.push_back(record("theta_sum", t1 + t2 + t3, m - b1 - b2 - c2 - Real(1), "=="));
  recs.push_back(record("theta_product", t1 * t2 * t3, m * b2, "=="));
  recs.push_back(record("theta_1_3_product", t1 * t3, m * t2, "=="));
  recs.push_back(record("theta2_squared", t2 * t2, b2, "=="));
  if (m != b1)
    recs.push_back(record("dual_tight_identity", t1 * t3 + m / (m - b1) * (t1 + t3), -(m * (b1 + Real(1))) / (m - b1), "=="));
  else
    recs.push_back(record("dual_tight_identity", m, b1, "!=", "m = b1* makes the identity undefined"));
  const Real div = m - b1 - Real(1);
  if (!div.is_zero())
    recs.push_back(record("theta2_closed_form", t2, -(m - b2 - c2) / div, "=="));
  else
    recs.push_back(record("theta2_closed_form", div, Real(0), "!=", "m - b1* - 1 = 0"));
  recs.push_back(record("q233_formula", q(2, 3, 3), m * (b2 - Real(1)) / c2, "=="));
  recs.push_back(record("b2_square_bound", b2 * b2, b2, ">="));

  auto lower = record("b2_lower_bound", b2 * (m - b1), m - c2, ">=", "equality iff b2* = 1");
  const bool lower_eq = exact::compare(lower.lhs, lower.rhs) == 0;
  lower.pass = lower.pass && lower_eq == (b2 == Real(1));
  recs.push_back(lower);

  auto upper = record("m3_bound", m - c2, b2 * (m - b1), ">=", "equality iff q_{3,3}^3 = 0");
  const bool upper_eq = exact::compare(upper.lhs, upper.rhs) == 0;
  upper.pass = upper.pass && upper_eq == q(3, 3, 3).is_zero();
  recs.push_back(upper);

  const Real m3 = q(3, 3, 0);
  recs.push_back(record("m3_value", m3, b1 * b2 / c2, "=="));
  recs.push_back(record("m3_column_sum", q(0, 3, 3) + q(1, 3, 3) + q(2, 3, 3) + q(3, 3, 3), m3, "=="));

  rep.all_pass = std::all_of(recs.begin(), recs.end(), [](const AuditRecord& r) { return r.pass; });
  rep.b2star_is_1 = b2 == Real(1);
  rep.b1star_eq_c2star = b1 == c2;
  rep.q_antipodal = qs.b_star[0] == qs.c_star[3] && b1 == c2 && b2 == qs.c_star[1];
  return rep;
}

std::optional<std::array<long, 3>> incidence_design(const AssociationScheme& s, int i) {
  if (!s.has_points()) throw DomainError("scheme has no point set");
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < s.n; ++x)
    for (int y = x + 1; y < s.n; ++y)
      if (s.rel(x, y) == i) edges.emplace_back(x, y);
  graphs::Graph g(s.n, edges);
  if (!g.is_connected()) return std::nullopt;
  graphs::IntersectionArray arr;
  try {
    arr = graphs::intersection_array(g);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  if (arr.diameter() != 3) return std::nullopt;
  const Integer k = arr.k;
  const Integer lambda = arr.c[1];
  if (!(k > lambda && lambda >= 1 && k - lambda >= 2)) return std::nullopt;
  if (arr.b[1] != k - 1 || arr.b[2] != k - lambda || arr.c[0] != 1 || arr.c[2] != k) return std::nullopt;
  const Integer num = k * (k - 1);
  if (num % lambda != 0) return std::nullopt;
  const Integer v = 1 + num / lambda;
  if (2 * v != s.n) return std::nullopt;
  return std::array<long, 3>{v.get_si(), k.get_si(), lambda.get_si()};
}

Thm51Result thm51_classify(const AssociationScheme& s) {
  if (!s.has_points() || s.d != 3) throw DomainError("class-3 scheme with points required");
  auto e = eigendata(s);
  return thm51_classify(s, find_q_orderings(e, krein(e)));
}

Thm51Result thm51_classify(const AssociationScheme& s, const std::vector<QPolyStructure>& structures) {
  if (!s.has_points() || s.d != 3) throw DomainError("class-3 scheme with points required");
  if (structures.empty()) throw DomainError("scheme is not Q-polynomial");
  Thm51Result out;
  for (const auto& qs : structures) {
    OrderingVerdict v{qs.ordering, dual_fundamental_bound(qs), std::nullopt};
    if (v.bound.dual_tight) {
      out.dual_tight = true;
      v.audit = class3_dualtight_audit(qs);
    }
    out.orderings.push_back(std::move(v));
  }
  for (int i = 1; i <= s.d && !out.design; ++i) {
    out.design = incidence_design(s, i);
    if (out.design) out.incidence_relation = i;
  }
  const bool found = out.design.has_value();
  out.consistent = std::all_of(out.orderings.begin(), out.orderings.end(),
                               [&](const OrderingVerdict& v) { return v.bound.dual_tight == found; });
  return out;
}

}  // namespace qpoly::schemes
