#include "qpoly/tridiag/system.hpp"

#include <algorithm>
#include <sstream>

#include "qpoly/errors.hpp"
#include "qpoly/exact/algebraic_real.hpp"

namespace qpoly::tridiag {

bool TridiagonalSystem::is_rational() const {
  auto rat = [](const std::vector<Real>& v) {
    return std::all_of(v.begin(), v.end(), [](const Real& r) { return r.is_rational(); });
  };
  return kappa.is_rational() && rat(alpha) && rat(beta) && rat(gamma);
}

TridiagonalSystem TridiagonalSystem::from_sides(const Real& kappa, const std::vector<Real>& beta,
                                                const std::vector<Real>& gamma) {
  if (beta.size() != gamma.size() || beta.empty()) throw DomainError("beta and gamma must both have D entries");
  const std::size_t d = beta.size();
  TridiagonalSystem s;
  s.kappa = kappa;
  s.beta = beta;
  s.beta.emplace_back(0);
  s.gamma.emplace_back(0);
  s.gamma.insert(s.gamma.end(), gamma.begin(), gamma.end());
  for (std::size_t i = 0; i <= d; ++i) s.alpha.push_back(kappa - s.beta[i] - s.gamma[i]);
  return s;
}

TridiagonalSystem TridiagonalSystem::from_arrays(const Real& kappa, const std::vector<Real>& alpha,
                                                 const std::vector<Real>& beta, const std::vector<Real>& gamma) {
  if (beta.size() != gamma.size() || alpha.size() != beta.size() + 1 || beta.empty())
    throw DomainError("expected D+1 alpha entries and D beta and gamma entries");
  TridiagonalSystem s;
  s.kappa = kappa;
  s.alpha = alpha;
  s.beta = beta;
  s.beta.emplace_back(0);
  s.gamma.emplace_back(0);
  s.gamma.insert(s.gamma.end(), gamma.begin(), gamma.end());
  return s;
}

ValidationReport validate(const TridiagonalSystem& s) {
  ValidationReport rep;
  auto fail = [&](const std::string& clause, const std::string& msg) {
    rep.valid = false;
    rep.violations.push_back(clause + ": " + msg);
  };
  const int d = s.diameter();
  if (d < 1 || s.beta.size() != s.alpha.size() || s.gamma.size() != s.alpha.size()) {
    fail("shape", "alpha, beta, gamma must describe a (D+1)x(D+1) matrix with D >= 1");
    return rep;
  }
  if (s.kappa.sign() <= 0) fail("kappa", "kappa must be positive");
  for (int i = 0; i <= d; ++i) {
    if (s.alpha[i].sign() < 0) fail("alpha_nonneg", "alpha_" + std::to_string(i) + " must be nonnegative");
  }
  for (int i = 0; i < d; ++i) {
    if (s.beta[i].sign() <= 0) fail("beta_pos", "beta_" + std::to_string(i) + " must be positive");
  }
  for (int i = 1; i <= d; ++i) {
    if (s.gamma[i].sign() <= 0) fail("gamma_pos", "gamma_" + std::to_string(i) + " must be positive");
  }
  if (!s.alpha[0].is_zero()) fail("alpha0", "alpha_0 must equal 0");
  if (s.gamma[1] != Real(1)) fail("gamma1", "gamma_1 must equal 1");
  for (int i = 0; i <= d; ++i) {
    if (s.alpha[i] + s.beta[i] + s.gamma[i] != s.kappa)
      fail("row_sum", "alpha_" + std::to_string(i) + " + beta_" + std::to_string(i) + " + gamma_" + std::to_string(i) +
                          " must equal kappa");
  }
  return rep;
}

void require_valid(const TridiagonalSystem& s) {
  auto rep = validate(s);
  if (!rep.valid) {
    const std::string& first = rep.violations.front();
    throw SemanticError("invalid tridiagonal system: " + first, first.substr(0, first.find(':')));
  }
}

Matrix<Real> full_matrix(const TridiagonalSystem& s) {
  const auto n = static_cast<std::size_t>(s.diameter() + 1);
  Matrix<Real> b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    b(i, i) = s.alpha[i];
    if (i + 1 < n) {
      b(i, i + 1) = s.beta[i];
      b(i + 1, i) = s.gamma[i + 1];
    }
  }
  return b;
}

Matrix<Real> reduced_matrix(const TridiagonalSystem& s) {
  require_valid(s);
  const int d = s.diameter();
  const auto n = static_cast<std::size_t>(d);
  Matrix<Real> b(n, n);
  b(0, 0) = -s.gamma[1];
  for (int i = 1; i < d; ++i) {
    const auto u = static_cast<std::size_t>(i);
    b(u, u) = s.kappa - s.beta[i] - s.gamma[i + 1];
    b(u - 1, u) = s.beta[i];
    b(u, u - 1) = s.gamma[i];
  }
  return b;
}

std::vector<RationalPoly> f_polynomials(const TridiagonalSystem& s) {
  require_valid(s);
  if (!s.is_rational()) throw DomainError("f_polynomials requires a rational system");
  const int d = s.diameter();
  const Rational k = s.kappa.rational();
  std::vector<RationalPoly> f{RationalPoly::constant(1), RationalPoly{1, 1}};
  for (int i = 2; i <= d; ++i) {
    const Rational shift = -k + s.beta[i - 1].rational() + s.gamma[i].rational();
    const Rational prod = s.beta[i - 1].rational() * s.gamma[i - 1].rational();
    f.push_back(RationalPoly{shift, 1} * f[i - 1] - f[i - 2] * prod);
  }
  return f;
}

namespace {

std::vector<AlgebraicReal> descending_roots(const RationalPoly& p) {
  auto r = exact::isolate_real_roots(p);
  std::reverse(r.begin(), r.end());
  return r;
}

}  // namespace

SpectrumReport spectrum(const TridiagonalSystem& s) {
  SpectrumReport rep;
  rep.f_polys = f_polynomials(s);
  const int d = s.diameter();
  for (int i = 1; i <= d; ++i) {
    auto roots = descending_roots(rep.f_polys[i]);
    if (static_cast<int>(roots.size()) != i || exact::squarefree_part(rep.f_polys[i]).degree() != i)
      throw SemanticError("F_" + std::to_string(i) + " does not have " + std::to_string(i) + " distinct real roots",
                          "real_roots");
    rep.root_table.push_back(std::move(roots));
  }
  const Rational k = s.kappa.rational();
  const auto& top = rep.root_table.back();
  if (exact::compare(top.front(), k) >= 0) throw SemanticError("kappa is not the largest eigenvalue", "kappa_largest");
  rep.eigenvalues.emplace_back(k);
  for (const auto& r : top) rep.eigenvalues.emplace_back(r);
  return rep;
}

SpectrumReport spectrum_from(const TridiagonalSystem& s, const std::vector<Real>& candidates) {
  require_valid(s);
  const int d = s.diameter();
  if (static_cast<int>(candidates.size()) != d + 1)
    throw SemanticError("expected D+1 eigenvalue candidates", "spectrum_size");
  std::vector<Real> cp = exact::berkowitz_charpoly(full_matrix(s));
  std::vector<Real> sorted = candidates;
  std::sort(sorted.begin(), sorted.end(), [](const Real& a, const Real& b) { return a > b; });
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i] == sorted[i + 1]) throw SemanticError("eigenvalue candidates are not distinct", "spectrum_distinct");
  }
  for (const Real& t : sorted) {
    Real acc = 0;
    for (std::size_t i = cp.size(); i-- > 0;) acc = acc * t + cp[i];
    if (!acc.is_zero()) throw SemanticError("candidate is not an eigenvalue: " + t.to_string(), "spectrum_root");
  }
  if (sorted.front() != s.kappa) throw SemanticError("kappa is not the largest eigenvalue", "kappa_largest");
  SpectrumReport rep;
  for (const Real& t : sorted) rep.eigenvalues.emplace_back(t);
  return rep;
}

CheckResult interlacing_check(const SpectrumReport& r) {
  CheckResult out;
  const int d = static_cast<int>(r.root_table.size());
  if (d == 0) {
    out.pass = false;
    out.witness = "no root table";
    return out;
  }
  if (exact::compare(r.root_table[0][0], Rational(-1)) != 0) {
    out.pass = false;
    out.witness = "alpha_{1,1} != -1";
    return out;
  }
  for (int i = 2; i <= d; ++i) {
    const auto& cur = r.root_table[i - 1];
    const auto& prev = r.root_table[i - 2];
    for (int j = 1; j < i; ++j) {
      if (!(exact::compare(cur[j], prev[j - 1]) < 0 && exact::compare(prev[j - 1], cur[j - 1]) < 0)) {
        std::ostringstream os;
        os << "alpha_{" << i << "," << j + 1 << "} < alpha_{" << i - 1 << "," << j << "} < alpha_{" << i << "," << j
           << "} fails";
        out.pass = false;
        out.witness = os.str();
        return out;
      }
    }
  }
  return out;
}

LemmaResult lemma_ineq(const Expr& a, const Expr& b, const Expr& c, const Expr& d, const Expr& t) {
  if (exact::compare(a, b) > 0 || exact::compare(b, c) >= 0 || exact::compare(c, d) > 0)
    throw DomainError("lemma requires a <= b < c <= d");
  if (exact::compare(t, b) < 0 || exact::compare(t, c) > 0) throw DomainError("lemma requires t in [b, c]");
  LemmaResult r{(t - a) * (t - d), (t - b) * (t - c), false, false};
  const int s = exact::compare(r.f, r.g);
  r.holds = s <= 0;
  r.equal = s == 0;
  return r;
}

namespace {

Inequality decide(Expr lhs, Expr rhs, const std::string& rel) {
  Inequality q{std::move(lhs), std::move(rhs), rel, false, false};
  const int s = exact::compare(q.lhs, q.rhs);
  q.equality = s == 0;
  q.holds = rel == "<=" ? s <= 0 : s >= 0;
  return q;
}

}  // namespace

Part1Result thm1_part1(const TridiagonalSystem& s, const SpectrumReport& r) {
  require_valid(s);
  const int d = s.diameter();
  if (d < 2) throw DomainError("theorem part 1 needs D >= 2");
  const auto& th = r.eigenvalues;
  Part1Result out;
  out.ineq = decide((th[1] + 1) * (th[d] + 1), Expr(-s.beta[1]), "<=");
  out.consistent = out.ineq.holds && (out.ineq.equality == (d == 2));
  return out;
}

Part1Result thm1_part1(const TridiagonalSystem& s) { return thm1_part1(s, spectrum(s)); }

Part2Result thm1_part2(const TridiagonalSystem& s, const SpectrumReport& r) {
  require_valid(s);
  const int d = s.diameter();
  if (d < 3) throw DomainError("theorem part 2 needs D >= 3");
  const auto& th = r.eigenvalues;
  Part2Result out;
  const Real slack = s.kappa + 1 - s.beta[2] - s.gamma[3];
  out.comparison = -slack.sign();
  Expr rhs = Expr(-s.beta[1] * slack);
  if (out.comparison >= 0) out.branches.push_back({"ge", decide((th[1] + 1) * (th[d - 1] + 1) * (th[d] + 1), rhs, ">=")});
  if (out.comparison <= 0) out.branches.push_back({"le", decide((th[1] + 1) * (th[2] + 1) * (th[d] + 1), rhs, "<=")});
  out.consistent = true;
  for (const auto& b : out.branches) {
    if (!b.ineq.holds || b.ineq.equality != (d == 3)) out.consistent = false;
  }
  return out;
}

Part2Result thm1_part2(const TridiagonalSystem& s) { return thm1_part2(s, spectrum(s)); }

RandomSystems::RandomSystems(std::uint64_t seed) : rng_(seed) {}

std::uint64_t RandomSystems::below(std::uint64_t n) {
  // Rejection keeps the draw uniform and independent of the library's
  // distribution implementation.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  while (true) {
    std::uint64_t v = rng_();
    if (v < limit) return v % n;
  }
}

Rational RandomSystems::draw(const Rational& lo, const Rational& hi) {
  // p/q with q in 1..4 and lo < p/q <= hi.
  while (true) {
    const long q = static_cast<long>(below(4)) + 1;
    Integer pmin = exact::floor(lo * q) + 1;
    Integer pmax = exact::floor(hi * q);
    if (pmax < pmin) continue;
    Integer span = pmax - pmin + 1;
    Rational r(pmin + Integer(static_cast<unsigned long>(below(span.get_ui()))), q);
    r.canonicalize();
    return r;
  }
}

TridiagonalSystem RandomSystems::next(int diameter) {
  if (diameter < 1) throw DomainError("diameter must be positive");
  const Rational kappa = draw(Rational(2), Rational(9));
  std::vector<Real> beta{Real(kappa)}, gamma;
  for (int i = 1; i <= diameter; ++i) {
    while (true) {
      Rational g = i == 1 ? Rational(1) : draw(Rational(0), kappa);
      Rational b = i == diameter ? Rational(0) : draw(Rational(0), kappa);
      if (g + b > kappa) continue;
      gamma.emplace_back(g);
      if (i < diameter) beta.emplace_back(b);
      break;
    }
  }
  return TridiagonalSystem::from_sides(Real(kappa), beta, gamma);
}

}  // namespace qpoly::tridiag
