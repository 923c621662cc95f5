#include "oracles.hpp"

#include <set>
#include <stdexcept>
#include <variant>

#include "qpoly/exact/algebraic_real.hpp"
#include "qpoly/families/corpus.hpp"
#include "qpoly/graphs/analysis.hpp"

namespace qpoly::oracle {

using exact::Integer;

namespace {

using PolyMatrix = std::vector<std::vector<RationalPoly>>;

RationalPoly det(const PolyMatrix& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  RationalPoly total;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<RationalPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    RationalPoly term = a[0][c] * det(minor);
    if (c % 2) total -= term;
    else total += term;
  }
  return total;
}

}  // namespace

RationalPoly cofactor_charpoly(const Matrix<Rational>& a) {
  const std::size_t n = a.rows();
  if (n == 0) return RationalPoly::constant(1);
  PolyMatrix m(n, std::vector<RationalPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = -a(i, j);
      m[i][j] = i == j ? RationalPoly{v, 1} : RationalPoly::constant(v);
    }
  return det(m);
}

std::vector<std::pair<Rational, Rational>> bisection_roots(const RationalPoly& p, int grid, int bits) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  Rational bound = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i) / p.leading());
    if (r > bound) bound = r;
  }
  bound += 1;
  const Rational width = Rational(1, 1) / (Integer(1) << bits);
  std::vector<std::pair<Rational, Rational>> out;
  Rational prev_x = -bound;
  int prev = p.sign_at(prev_x);
  if (prev == 0) out.emplace_back(prev_x, prev_x);
  for (int g = 1; g <= grid; ++g) {
    Rational x = -bound + 2 * bound * g / grid;
    x.canonicalize();
    const int s = p.sign_at(x);
    if (s == 0) {
      out.emplace_back(x, x);
    } else if (prev != 0 && s != prev) {
      Rational lo = prev_x, hi = x;
      while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        const int sm = p.sign_at(mid);
        if (sm == 0) {
          lo = hi = mid;
          break;
        }
        if (sm == prev) lo = mid;
        else hi = mid;
      }
      out.emplace_back(lo, hi);
    }
    prev = s;
    prev_x = x;
  }
  return out;
}

namespace {

// Solves a square rational system by Gauss-Jordan elimination.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular system");
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

BruteKrein brute_force_krein(const schemes::AssociationScheme& s) {
  if (!s.has_points()) throw std::invalid_argument("brute-force Krein needs the relations");
  const int n = s.n, d = s.d;
  const auto sz = [](int v) { return static_cast<std::size_t>(v); };
  std::vector<std::pair<int, int>> rep(sz(d + 1), {-1, -1});
  std::vector<long> k(sz(d + 1), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int u = s.rel(x, y);
      if (rep[sz(u)].first < 0) rep[sz(u)] = {x, y};
      if (x == 0) ++k[sz(u)];
    }

  // M = sum_u (w+1)^u A_u. Its eigenvalue on E_j is a polynomial in w
  // of degree at most d fixed by row j of P; distinct rows give distinct
  // polynomials, so only finitely many w fail to separate.
  const long tries = static_cast<long>(d + 1) * d * d / 2 + 2;
  for (long w = 1;; ++w) {
    if (w > tries) throw std::runtime_error("no generic element found");
    std::vector<Integer> coef(sz(d + 1), Integer(0));
    for (int u = 1; u <= d; ++u) {
      mpz_ui_pow_ui(coef[sz(u)].get_mpz_t(), static_cast<unsigned long>(w + 1), static_cast<unsigned long>(u));
    }
    Matrix<Integer> m(sz(n), sz(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) m(sz(x), sz(y)) = coef[sz(s.rel(x, y))];
    // Powers restricted to one pair per relation; every entry is checked
    // to be constant on its relation.
    std::vector<std::vector<Rational>> powers;
    Matrix<Integer> pw = Matrix<Integer>::identity(sz(n));
    for (int t = 0; t <= d + 1; ++t) {
      std::vector<Rational> v(sz(d + 1));
      for (int u = 0; u <= d; ++u) v[sz(u)] = pw(sz(rep[sz(u)].first), sz(rep[sz(u)].second));
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (Rational(pw(sz(x), sz(y))) != v[sz(s.rel(x, y))]) throw std::runtime_error("power leaves the Bose-Mesner algebra");
      powers.push_back(std::move(v));
      if (t <= d) pw = pw * m;
    }
    // Minimal polynomial of degree d + 1: x^{d+1} = sum_t c_t x^t.
    std::vector<std::vector<Rational>> a(sz(d + 1), std::vector<Rational>(sz(d + 1)));
    for (int u = 0; u <= d; ++u)
      for (int t = 0; t <= d; ++t) a[sz(u)][sz(t)] = powers[sz(t)][sz(u)];
    std::vector<Rational> c;
    try {
      c = solve(a, powers[sz(d + 1)]);
    } catch (const std::runtime_error&) {
      continue;
    }
    std::vector<Rational> coeffs;
    for (const auto& ct : c) coeffs.push_back(-ct);
    coeffs.push_back(1);
    const RationalPoly minpoly(coeffs);
    const auto roots = exact::isolate_real_roots(minpoly);
    if (static_cast<int>(roots.size()) != d + 1) continue;
    const auto lambda = exact::to_reals(roots);

    BruteKrein out;
    for (int j = 0; j <= d; ++j) {
      // Lagrange basis polynomial, coefficients constant term first.
      std::vector<Real> lj{Real(1)};
      Real denom(1);
      for (int l = 0; l <= d; ++l) {
        if (l == j) continue;
        std::vector<Real> next(lj.size() + 1, Real(0));
        for (std::size_t i = 0; i < lj.size(); ++i) {
          next[i + 1] += lj[i];
          next[i] -= lj[i] * lambda[sz(l)];
        }
        lj = std::move(next);
        denom *= lambda[sz(j)] - lambda[sz(l)];
      }
      std::vector<Real> prof;
      for (int u = 0; u <= d; ++u) {
        Real e(0);
        for (int t = 0; t <= d; ++t) e += lj[sz(t)] * Real(powers[sz(t)][sz(u)]);
        prof.push_back(e / denom);
      }
      out.m.push_back(Real(n) * prof[0]);
      out.profile.push_back(std::move(prof));
    }
    out.q.assign(sz(d + 1), std::vector<std::vector<Real>>(sz(d + 1), std::vector<Real>(sz(d + 1), Real(0))));
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j)
        for (int h = 0; h <= d; ++h) {
          Real sum(0);
          for (int u = 0; u <= d; ++u)
            sum += Real(n * k[sz(u)]) * out.profile[sz(i)][sz(u)] * out.profile[sz(j)][sz(u)] * out.profile[sz(h)][sz(u)];
          out.q[sz(i)][sz(j)][sz(h)] = Real(n) * sum / out.m[sz(h)];
        }
    return out;
  }
}

std::vector<int> match_idempotents(const BruteKrein& b, const schemes::EigenData& e) {
  const int d = e.d;
  std::vector<int> perm;
  for (int j = 0; j <= d; ++j) {
    int found = -1;
    for (int jj = 0; jj <= d && found < 0; ++jj) {
      bool same = true;
      for (int u = 0; u <= d && same; ++u)
        same = b.profile[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)] ==
               e.Q(static_cast<std::size_t>(u), static_cast<std::size_t>(jj)) / Real(e.n);
      if (same) found = jj;
    }
    if (found < 0) throw std::runtime_error("oracle idempotent has no match");
    perm.push_back(found);
  }
  return perm;
}

std::vector<NamedScheme> corpus_schemes(int max_n) {
  std::set<std::string> names;
  for (const auto& e : families::corpus()) names.insert(e.name);
  std::vector<NamedScheme> out;
  for (const auto& e : families::corpus()) {
    const auto obj = e.build();
    if (const auto* s = std::get_if<schemes::AssociationScheme>(&obj)) {
      if (s->has_points() && s->n <= max_n) out.push_back({e.name, *s});
    } else if (const auto* g = std::get_if<graphs::Graph>(&obj)) {
      if (g->order() > max_n || g->is_complete() || names.count(e.name + "_scheme")) continue;
      if (!graphs::classify_regularity(*g).distance_regular) continue;
      out.push_back({e.name, schemes::scheme_from_graph(*g)});
    }
  }
  return out;
}

}  // namespace qpoly::oracle
