#include "qpoly/schemes/scheme.hpp"

#include <algorithm>

#include "qpoly/errors.hpp"
#include "qpoly/exact/algebraic_real.hpp"

namespace qpoly::schemes {

std::vector<Integer> AssociationScheme::valencies() const {
  std::vector<Integer> k;
  for (int i = 0; i <= d; ++i) k.push_back(p[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)][0]);
  return k;
}

Matrix<Integer> AssociationScheme::adjacency(int i) const {
  if (!has_points()) throw DomainError("scheme has no point set");
  const auto un = static_cast<std::size_t>(n);
  Matrix<Integer> a(un, un);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (rel(x, y) == i) a(static_cast<std::size_t>(x), static_cast<std::size_t>(y)) = 1;
  return a;
}

namespace {

Table3 empty_table(int d, const Integer& fill) {
  const auto m = static_cast<std::size_t>(d + 1);
  return Table3(m, std::vector<std::vector<Integer>>(m, std::vector<Integer>(m, fill)));
}

// Relation-level axioms; returns violations instead of throwing.
std::vector<std::string> relation_violations(int n, const std::vector<int>& r, int& d, Table3* p_out) {
  std::vector<std::string> v;
  if (n < 1 || r.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    v.emplace_back("shape: relation matrix must be n x n");
    return v;
  }
  auto at = [&](int x, int y) { return r[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)]; };
  d = *std::max_element(r.begin(), r.end());
  if (*std::min_element(r.begin(), r.end()) < 0) v.emplace_back("relation_index: negative relation index");
  std::vector<char> used(static_cast<std::size_t>(d) + 1, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int i = at(x, y);
      if (i < 0) continue;
      used[static_cast<std::size_t>(i)] = 1;
      if ((x == y) != (i == 0)) {
        v.emplace_back("identity: R_0 must be exactly the diagonal");
        return v;
      }
      if (at(y, x) != i) {
        v.emplace_back("symmetric: relations must be symmetric");
        return v;
      }
    }
  for (int i = 0; i <= d; ++i)
    if (!used[static_cast<std::size_t>(i)]) v.push_back("nonempty: relation R_" + std::to_string(i) + " is empty");
  if (!v.empty()) return v;
  Table3 p = empty_table(d, Integer(-1));
  std::vector<long> count(static_cast<std::size_t>((d + 1) * (d + 1)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int h = at(x, y);
      std::fill(count.begin(), count.end(), 0);
      for (int z = 0; z < n; ++z) ++count[static_cast<std::size_t>(at(x, z) * (d + 1) + at(z, y))];
      for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
          auto& slot = p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(h)];
          const long c = count[static_cast<std::size_t>(i * (d + 1) + j)];
          if (slot < 0) {
            slot = c;
          } else if (slot != c) {
            v.push_back("intersection_constant: p_{" + std::to_string(i) + "," + std::to_string(j) + "}^" +
                        std::to_string(h) + " depends on the pair");
            return v;
          }
        }
    }
  if (p_out) *p_out = std::move(p);
  return v;
}

}  // namespace

AssociationScheme scheme_from_relations(int n, const std::vector<int>& relation) {
  AssociationScheme s;
  s.n = n;
  auto v = relation_violations(n, relation, s.d, &s.p);
  if (!v.empty()) throw SemanticError(v.front(), v.front().substr(0, v.front().find(':')));
  s.relation = relation;
  return s;
}

AssociationScheme scheme_from_pairs(int n, const std::vector<std::vector<std::pair<int, int>>>& relations) {
  if (n < 1) throw SemanticError("scheme needs at least one point", "shape");
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> r(un * un, -1);
  for (std::size_t i = 0; i < relations.size(); ++i) {
    for (auto [x, y] : relations[i]) {
      if (x < 0 || y < 0 || x >= n || y >= n) throw SemanticError("pair outside the point set", "partition");
      auto& slot = r[static_cast<std::size_t>(x) * un + static_cast<std::size_t>(y)];
      if (slot >= 0) throw SemanticError("relations overlap", "partition");
      slot = static_cast<int>(i);
    }
  }
  if (std::find(r.begin(), r.end(), -1) != r.end()) throw SemanticError("relations do not cover X x X", "partition");
  return scheme_from_relations(n, r);
}

AssociationScheme scheme_from_graph(const graphs::Graph& g) {
  const int n = g.order();
  std::vector<int> r;
  r.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    auto dist = g.distances(x);
    if (std::find(dist.begin(), dist.end(), -1) != dist.end()) throw DomainError("graph is not connected");
    r.insert(r.end(), dist.begin(), dist.end());
  }
  try {
    return scheme_from_relations(n, r);
  } catch (const SemanticError&) {
    throw DomainError("graph is not distance-regular");
  }
}

SchemeReport verify_scheme(const AssociationScheme& s) {
  SchemeReport rep;
  auto fail = [&](std::string msg) {
    rep.valid = false;
    rep.violations.push_back(std::move(msg));
  };
  if (s.has_points()) {
    int d = 0;
    Table3 p;
    for (auto& v : relation_violations(s.n, s.relation, d, &p)) fail(v);
    if (rep.valid && (d != s.d || p != s.p)) fail("intersection_numbers: supplied table differs from the relations");
  }
  if (s.d < 2) fail("class: class at least 2 is required");
  const auto m = static_cast<std::size_t>(s.d + 1);
  if (s.p.size() != m) {
    fail("shape: intersection table must be (D+1)^3");
    return rep;
  }
  for (const auto& row : s.p) {
    if (row.size() != m) {
      fail("shape: intersection table must be (D+1)^3");
      return rep;
    }
    for (const auto& col : row)
      if (col.size() != m) {
        fail("shape: intersection table must be (D+1)^3");
        return rep;
      }
  }
  auto p = [&](std::size_t i, std::size_t j, std::size_t h) -> const Integer& { return s.p[i][j][h]; };
  std::vector<Integer> k(m);
  for (std::size_t i = 0; i < m; ++i) k[i] = p(i, i, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (k[i] <= 0) fail("valency: k_" + std::to_string(i) + " must be positive");
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t h = 0; h < m; ++h) {
        if (p(i, j, h) < 0) fail("nonnegative: negative intersection number");
        if (p(0, j, h) != (j == h ? 1 : 0)) fail("identity: p_{0j}^h must be delta_{jh}");
        if (p(i, j, h) != p(j, i, h)) fail("commutative: p_{ij}^h != p_{ji}^h");
        if (k[h] * p(i, j, h) != k[i] * p(h, j, i)) fail("balance: k_h p_{ij}^h != k_i p_{hj}^i");
      }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t h = 0; h < m; ++h) {
      Integer sum = 0;
      for (std::size_t j = 0; j < m; ++j) sum += p(i, j, h);
      if (sum != k[i]) fail("row_sum: sum_j p_{" + std::to_string(i) + "j}^" + std::to_string(h) + " != k_" + std::to_string(i));
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t h = 0; h < m; ++h) {
          Integer left = 0, right = 0;
          for (std::size_t r = 0; r < m; ++r) {
            left += p(i, j, r) * p(r, l, h);
            right += p(j, l, r) * p(i, r, h);
          }
          if (left != right) fail("associative: structure constants are not associative");
        }
  std::sort(rep.violations.begin(), rep.violations.end());
  rep.violations.erase(std::unique(rep.violations.begin(), rep.violations.end()), rep.violations.end());
  return rep;
}

namespace {

// Inverse of a square rational matrix by Gauss-Jordan elimination.
Matrix<Rational> inverse(Matrix<Rational> a) {
  const std::size_t n = a.rows();
  Matrix<Rational> inv = Matrix<Rational>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw DomainError("singular matrix");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    const Rational s = Rational(1) / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

EigenData finish(Matrix<Real> P) {
  EigenData e;
  e.d = static_cast<int>(P.rows()) - 1;
  const auto m = P.rows();
  Real n = 0;
  for (std::size_t u = 0; u < m; ++u) {
    e.k.push_back(P(0, u));
    n += P(0, u);
  }
  auto nq = n.as_rational();
  if (!nq || !exact::is_integer(*nq)) throw SemanticError("valencies do not sum to an integer", "eigen_size");
  e.n = static_cast<int>(nq->get_num().get_si());
  e.Q = Matrix<Real>(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    Real s = 0;
    for (std::size_t u = 0; u < m; ++u) s += P(j, u) * P(j, u) / e.k[u];
    e.m.push_back(n / s);
    for (std::size_t u = 0; u < m; ++u) e.Q(u, j) = e.m[j] * P(j, u) / e.k[u];
  }
  Matrix<Real> pq = P * e.Q;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (pq(i, j) != (i == j ? n : Real(0))) throw SemanticError("PQ differs from nI", "eigen_pq");
  e.P = std::move(P);
  return e;
}

}  // namespace

EigenData eigendata(const AssociationScheme& s) {
  const int d = s.d;
  const auto m = static_cast<std::size_t>(d + 1);
  auto p = [&](std::size_t i, std::size_t j, std::size_t h) -> const Integer& { return s.p[i][j][h]; };
  std::vector<Matrix<Rational>> L(m, Matrix<Rational>(m, m));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t h = 0; h < m; ++h)
      for (std::size_t j = 0; j < m; ++j) L[u](h, j) = Rational(p(u, j, h));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      if (!(L[u] * L[v] == L[v] * L[u])) throw DomainError("non-commutative scheme");

  // Generic element M = sum_u t^(u-1) L_u with D+1 distinct eigenvalues.
  Matrix<Rational> M;
  exact::RationalPoly cp;
  for (long t = 2;; ++t) {
    M = Matrix<Rational>(m, m);
    Rational w = 1;
    for (std::size_t u = 1; u < m; ++u, w *= t)
      for (std::size_t h = 0; h < m; ++h)
        for (std::size_t j = 0; j < m; ++j) M(h, j) += w * L[u](h, j);
    cp = exact::RationalPoly(exact::berkowitz_charpoly(M));
    if (exact::gcd(cp, cp.derivative()).degree() == 0) break;
    if (t > 1000) throw DomainError("no generic element found");
  }
  auto roots = exact::isolate_real_roots(cp);
  if (roots.size() != m) throw SemanticError("Bose-Mesner algebra has non-real eigenvalues", "eigen_real");
  std::vector<Real> lambda = exact::to_reals(roots);

  // e_u = L_u e_0 = sum_t a_{ut} M^t e_0.
  Matrix<Rational> V(m, m);
  std::vector<Rational> col(m, Rational(0));
  col[0] = 1;
  for (std::size_t t = 0; t < m; ++t) {
    for (std::size_t h = 0; h < m; ++h) V(h, t) = col[h];
    std::vector<Rational> next(m, Rational(0));
    for (std::size_t h = 0; h < m; ++h)
      for (std::size_t j = 0; j < m; ++j) next[h] += M(h, j) * col[j];
    col = std::move(next);
  }
  Matrix<Rational> Vinv = inverse(V);
  std::vector<std::vector<Real>> rows;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Real> row;
    for (std::size_t u = 0; u < m; ++u) {
      Real acc = 0;
      for (std::size_t t = m; t-- > 0;) acc = acc * lambda[j] + Real(Vinv(t, u));
      row.push_back(acc);
    }
    rows.push_back(std::move(row));
  }
  auto k = s.valencies();
  auto trivial = std::find_if(rows.begin(), rows.end(), [&](const std::vector<Real>& r) {
    for (std::size_t u = 0; u < m; ++u)
      if (r[u] != Real(Rational(k[u]))) return false;
    return true;
  });
  if (trivial == rows.end()) throw SemanticError("no idempotent with the valencies as eigenvalues", "eigen_trivial");
  std::vector<Real> first = *trivial;
  rows.erase(trivial);
  std::sort(rows.begin(), rows.end(), [&](const std::vector<Real>& a, const std::vector<Real>& b) {
    for (std::size_t u = 1; u < m; ++u) {
      const int c = exact::compare(a[u], b[u]);
      if (c != 0) return c > 0;
    }
    return false;
  });
  rows.insert(rows.begin(), first);
  Matrix<Real> P(m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t u = 0; u < m; ++u) P(j, u) = rows[j][u];
  EigenData e = finish(std::move(P));
  if (e.n != s.n && s.has_points()) throw SemanticError("valencies do not add up to |X|", "eigen_size");
  return e;
}

EigenData eigendata_from_p(const Matrix<Real>& P) {
  if (P.rows() != P.cols() || P.rows() < 2) throw DomainError("eigenmatrix must be square of size at least 2");
  return finish(P);
}

KreinTable krein(const EigenData& e) {
  const auto m = static_cast<std::size_t>(e.d + 1);
  const Real n(static_cast<long>(e.n));
  std::vector<Real> w;
  for (std::size_t u = 0; u < m; ++u) w.push_back(Real(1) / (e.k[u] * e.k[u]));
  KreinTable t;
  t.q.assign(m, std::vector<std::vector<Real>>(m, std::vector<Real>(m)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const Real scale = e.m[i] * e.m[j] / n;
      std::vector<Real> pij;
      for (std::size_t u = 0; u < m; ++u) pij.push_back(e.P(i, u) * e.P(j, u) * w[u]);
      for (std::size_t h = 0; h < m; ++h) {
        Real acc = 0;
        for (std::size_t u = 0; u < m; ++u) acc += pij[u] * e.P(h, u);
        t.q[i][j][h] = scale * acc;
        t.q[j][i][h] = t.q[i][j][h];
      }
    }
  return t;
}

KreinReport check_krein(const KreinTable& t) {
  KreinReport r;
  const std::size_t m = t.q.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t h = 0; h < m; ++h) {
        const std::string at = "q_{" + std::to_string(i) + "," + std::to_string(j) + "}^" + std::to_string(h);
        if (t.q[i][j][h].sign() < 0) {
          r.nonnegative = false;
          r.violations.push_back("krein_condition: " + at + " is negative");
        }
        if (t.q[i][j][h] != t.q[j][i][h]) {
          r.symmetric = false;
          r.violations.push_back("symmetry: " + at);
        }
        if (i == 0 && t.q[i][j][h] != Real(j == h ? 1 : 0)) {
          r.identity_row = false;
          r.violations.push_back("identity: " + at);
        }
      }
  return r;
}

}  // namespace qpoly::schemes
