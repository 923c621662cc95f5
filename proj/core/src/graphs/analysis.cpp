#include "qpoly/graphs/analysis.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "qpoly/errors.hpp"

namespace qpoly::graphs {

DistancePartition bfs_partition(const Graph& g, int x) {
  if (x < 0 || x >= g.order()) throw DomainError("vertex out of range");
  auto d = g.distances(x);
  DistancePartition p;
  p.base = x;
  for (int v = 0; v < g.order(); ++v) {
    const int dv = d[static_cast<std::size_t>(v)];
    if (dv < 0) throw DomainError("graph is not connected");
    if (static_cast<std::size_t>(dv) >= p.cells.size()) p.cells.resize(static_cast<std::size_t>(dv) + 1);
    p.cells[static_cast<std::size_t>(dv)].push_back(v);
  }
  return p;
}

QuotientMatrix quotient_matrix(const Graph& g, const DistancePartition& p) {
  const std::size_t m = p.cells.size();
  std::vector<int> cell_of(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < m; ++i)
    for (int v : p.cells[i]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
  QuotientMatrix q;
  q.entries = Matrix<Rational>(m, m);
  q.equitable = true;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<long> first;
    std::vector<long> total(m, 0);
    for (int v : p.cells[i]) {
      std::vector<long> counts(m, 0);
      for (int u : g.neighbors(v)) ++counts[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(u)])];
      if (first.empty()) {
        first = counts;
      } else if (counts != first) {
        q.equitable = false;
      }
      for (std::size_t j = 0; j < m; ++j) total[j] += counts[j];
    }
    const auto size = static_cast<long>(p.cells[i].size());
    for (std::size_t j = 0; j < m; ++j) {
      Rational r(total[j], size);
      r.canonicalize();
      q.entries(i, j) = r;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    q.alpha.push_back(q.entries(i, i));
    q.beta.push_back(i + 1 < m ? q.entries(i, i + 1) : Rational(0));
    q.gamma.push_back(i > 0 ? q.entries(i, i - 1) : Rational(0));
  }
  return q;
}

tridiag::TridiagonalSystem quotient_system(const Graph& g, const QuotientMatrix& q) {
  auto k = g.regular_degree();
  if (!k) throw DomainError("quotient system requires a regular graph");
  const std::size_t d = q.alpha.size() - 1;
  if (d < 1) throw DomainError("quotient system requires at least two cells");
  std::vector<exact::Real> alpha, beta, gamma;
  for (std::size_t i = 0; i <= d; ++i) alpha.emplace_back(q.alpha[i]);
  for (std::size_t i = 0; i < d; ++i) beta.emplace_back(q.beta[i]);
  for (std::size_t i = 1; i <= d; ++i) gamma.emplace_back(q.gamma[i]);
  auto s = tridiag::TridiagonalSystem::from_arrays(exact::Real(*k), alpha, beta, gamma);
  tridiag::require_valid(s);
  return s;
}

GraphSpectrum spectrum_graph(const Graph& g) {
  if (g.order() == 0) throw DomainError("spectrum of the empty graph");
  const auto n = static_cast<std::size_t>(g.order());
  Matrix<Integer> a(n, n);
  for (auto [u, v] : g.edges()) {
    a(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = 1;
    a(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = 1;
  }
  std::vector<Integer> cp = exact::berkowitz_charpoly(a);
  std::vector<Rational> coeffs(cp.begin(), cp.end());
  GraphSpectrum s;
  s.charpoly = RationalPoly(coeffs);
  auto roots = exact::isolate_real_roots_with_multiplicity(s.charpoly);
  int total = 0;
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    s.eigenvalues.push_back(it->root);
    s.multiplicities.push_back(it->multiplicity);
    total += it->multiplicity;
  }
  if (total != g.order()) throw SemanticError("adjacency spectrum is not fully real", "spectrum_real");
  return s;
}

InterlaceResult interlace_check(const Graph& g, int x, const GraphSpectrum& spec) {
  auto q = quotient_matrix(g, bfs_partition(g, x));
  auto sp = tridiag::spectrum(quotient_system(g, q));
  InterlaceResult out;
  out.tau.emplace_back(sp.eigenvalues.empty() ? Rational(0) : Rational(*g.regular_degree()));
  for (const auto& r : sp.root_table.back()) out.tau.push_back(r);
  // Expanded adjacency eigenvalues, decreasing.
  std::vector<const AlgebraicReal*> lam;
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i)
    for (int t = 0; t < spec.multiplicities[i]; ++t) lam.push_back(&spec.eigenvalues[i]);
  const std::size_t n = lam.size(), m = out.tau.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (exact::compare(*lam[i], out.tau[i]) < 0 || exact::compare(out.tau[i], *lam[n - m + i]) < 0) {
      out.pass = false;
      out.witness = "interlacing fails at quotient eigenvalue " + std::to_string(i);
      return out;
    }
  }
  return out;
}

InterlaceResult interlace_check(const Graph& g, int x) { return interlace_check(g, x, spectrum_graph(g)); }

RegularityReport classify_regularity(const Graph& g) {
  RegularityReport r;
  r.connected = g.is_connected();
  r.degree = g.regular_degree();
  r.bipartite = g.is_bipartite();
  if (!r.connected) return r;
  using Triple = std::tuple<int, int, int>;
  std::vector<std::vector<Triple>> arrays;
  bool all_around = true;
  for (int x = 0; x < g.order(); ++x) {
    auto d = g.distances(x);
    const int ecc = *std::max_element(d.begin(), d.end());
    r.diameter = std::max(r.diameter, ecc);
    std::vector<Triple> arr(static_cast<std::size_t>(ecc) + 1, Triple{-1, -1, -1});
    bool around = true;
    for (int y = 0; y < g.order(); ++y) {
      const int i = d[static_cast<std::size_t>(y)];
      int c = 0, a = 0, b = 0;
      for (int u : g.neighbors(y)) {
        const int du = d[static_cast<std::size_t>(u)];
        if (du == i - 1) ++c;
        if (du == i) ++a;
        if (du == i + 1) ++b;
      }
      auto& slot = arr[static_cast<std::size_t>(i)];
      if (std::get<0>(slot) < 0) {
        slot = Triple{c, a, b};
      } else if (slot != Triple{c, a, b}) {
        around = false;
      }
    }
    r.distance_regular_around.push_back(around);
    all_around = all_around && around;
    arrays.push_back(std::move(arr));
  }
  r.distance_regularised = all_around;
  r.distance_regular = all_around && std::all_of(arrays.begin(), arrays.end(), [&](const auto& a) { return a == arrays[0]; });
  r.strongly_regular = r.distance_regular && r.diameter == 2;
  r.distance_biregular = r.bipartite && r.distance_regularised && !r.distance_regular;
  return r;
}

KpyReport kpy_check(const Graph& g) {
  if (!g.is_connected()) throw DomainError("graph is not connected");
  return kpy_check(g, spectrum_graph(g), classify_regularity(g));
}

KpyReport kpy_check(const Graph& g, const GraphSpectrum& spec, const RegularityReport& reg) {
  if (!reg.connected) throw DomainError("graph is not connected");
  if (!reg.degree) throw DomainError("graph is not regular");
  if (g.size() == 0) throw DomainError("graph has no edges");
  if (g.is_complete()) throw DomainError("complete graphs are outside the theorem's scope");
  const Expr lhs = (Expr(spec.eigenvalues[1]) + 1) * (Expr(spec.eigenvalues.back()) + 1);
  KpyReport out;
  out.all_hold = true;
  out.equality_everywhere = true;
  std::map<Rational, int> decided;  // -beta_1(x) -> sign(lhs - rhs)
  for (int x = 0; x < g.order(); ++x) {
    auto q = quotient_matrix(g, bfs_partition(g, x));
    const Rational rhs = -q.beta[1];
    auto it = decided.find(rhs);
    if (it == decided.end()) it = decided.emplace(rhs, exact::compare(lhs, Expr(rhs))).first;
    VertexBound vb{x, lhs, Expr(rhs), it->second <= 0, it->second == 0};
    out.all_hold = out.all_hold && vb.holds;
    out.equality_everywhere = out.equality_everywhere && vb.equality;
    out.vertices.push_back(std::move(vb));
  }
  out.strongly_regular = reg.strongly_regular;
  out.consistent = out.all_hold && out.equality_everywhere == reg.strongly_regular;
  return out;
}

std::vector<Integer> IntersectionArray::valencies() const {
  std::vector<Integer> ks{Integer(1)};
  for (std::size_t i = 0; i < c.size(); ++i) {
    Integer num = ks.back() * b[i];
    if (num % c[i] != 0) throw SemanticError("valency k_" + std::to_string(i + 1) + " is not integral", "valency");
    ks.push_back(num / c[i]);
  }
  return ks;
}

tridiag::TridiagonalSystem IntersectionArray::system() const {
  std::vector<exact::Real> beta, gamma;
  for (const auto& x : b) beta.emplace_back(Rational(x));
  for (const auto& x : c) gamma.emplace_back(Rational(x));
  return tridiag::TridiagonalSystem::from_sides(exact::Real(Rational(k)), beta, gamma);
}

std::string IntersectionArray::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << ";";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << "}";
  return os.str();
}

IntersectionArray make_array(const std::vector<long>& b, const std::vector<long>& c) {
  if (b.size() != c.size() || b.empty()) throw DomainError("intersection array needs D entries on each side");
  IntersectionArray arr;
  arr.k = b[0];
  for (long x : b) arr.b.emplace_back(x);
  for (long x : c) arr.c.emplace_back(x);
  const std::size_t d = b.size();
  for (std::size_t i = 0; i <= d; ++i) {
    Integer bi = i < d ? arr.b[i] : Integer(0);
    Integer ci = i > 0 ? arr.c[i - 1] : Integer(0);
    arr.a.push_back(arr.k - bi - ci);
    if (arr.a.back() < 0) throw SemanticError("negative a_" + std::to_string(i), "array_nonneg");
  }
  if (arr.c[0] != 1) throw SemanticError("c_1 must equal 1", "array_c1");
  return arr;
}

IntersectionArray intersection_array(const Graph& g) {
  auto reg = classify_regularity(g);
  if (!reg.distance_regular) throw DomainError("graph is not distance-regular");
  auto q = quotient_matrix(g, bfs_partition(g, 0));
  const std::size_t d = q.alpha.size() - 1;
  std::vector<long> b, c;
  for (std::size_t i = 0; i < d; ++i) b.push_back(q.beta[i].get_num().get_si());
  for (std::size_t i = 1; i <= d; ++i) c.push_back(q.gamma[i].get_num().get_si());
  auto arr = make_array(b, c);
  arr.valencies();
  return arr;
}

tridiag::Part2Result thm31_check(const Graph& g) {
  auto arr = intersection_array(g);
  if (arr.diameter() < 3) throw DomainError("diameter must be at least 3");
  return tridiag::thm1_part2(arr.system());
}

FundamentalBound fundamental_bound(const IntersectionArray& arr, const GraphSpectrum& spec, bool bipartite) {
  FundamentalBound f;
  f.k = Rational(arr.k);
  f.a1 = Rational(arr.a[1]);
  f.b1 = arr.b.size() > 1 ? Rational(arr.b[1]) : Rational(0);
  const Rational shift = f.k / (f.a1 + 1);
  f.lhs = (Expr(spec.eigenvalues[1]) + shift) * (Expr(spec.eigenvalues.back()) + shift);
  f.rhs = Expr(Rational(-f.k * f.a1 * f.b1 / ((f.a1 + 1) * (f.a1 + 1))));
  const int s = exact::compare(f.lhs, f.rhs);
  f.holds = s >= 0;
  f.equality = s == 0;
  f.bipartite = bipartite;
  f.tight = !bipartite && f.equality;
  return f;
}

FundamentalBound fundamental_bound(const Graph& g) {
  auto arr = intersection_array(g);
  return fundamental_bound(arr, spectrum_graph(g), g.is_bipartite());
}

}  // namespace qpoly::graphs
