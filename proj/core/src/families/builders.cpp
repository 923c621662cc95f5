#include "qpoly/families/builders.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

#include "qpoly/errors.hpp"

namespace qpoly::families {

void validate_design(const SymmetricDesign& d) {
  if (d.v < 2 || d.k < 1 || d.k > d.v) throw SemanticError("design parameters out of range", "design_params");
  if (static_cast<int>(d.blocks.size()) != d.v) throw SemanticError("number of blocks differs from number of points", "design_square");
  std::vector<int> rep(static_cast<std::size_t>(d.v), 0);
  std::vector<std::vector<int>> pairs(static_cast<std::size_t>(d.v), std::vector<int>(static_cast<std::size_t>(d.v), 0));
  for (const auto& b : d.blocks) {
    std::set<int> s(b.begin(), b.end());
    if (static_cast<int>(s.size()) != d.k || static_cast<int>(b.size()) != d.k)
      throw SemanticError("block size differs from k", "design_block_size");
    for (int p : b) {
      if (p < 0 || p >= d.v) throw SemanticError("point out of range", "design_point");
      ++rep[static_cast<std::size_t>(p)];
    }
    for (int p : b)
      for (int q : b)
        if (p < q) ++pairs[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  }
  for (int c : rep)
    if (c != d.k) throw SemanticError("a point lies in a number of blocks other than k", "design_replication");
  for (int p = 0; p < d.v; ++p)
    for (int q = p + 1; q < d.v; ++q)
      if (pairs[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] != d.lambda)
        throw SemanticError("a pair lies in a number of blocks other than lambda", "design_pairs");
}

Graph cycle(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph(n, e);
}

Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, e);
}

Graph hamming(int d, int q) {
  if (d < 1 || q < 2) throw DomainError("hamming needs d >= 1 and q >= 2");
  long n = 1;
  for (int i = 0; i < d; ++i) {
    n *= q;
    if (n > 100000) throw DomainError("hamming graph too large");
  }
  std::vector<std::pair<int, int>> e;
  for (long u = 0; u < n; ++u) {
    long place = 1;
    for (int c = 0; c < d; ++c, place *= q) {
      const long digit = (u / place) % q;
      for (long t = digit + 1; t < q; ++t) e.emplace_back(static_cast<int>(u), static_cast<int>(u + (t - digit) * place));
    }
  }
  return Graph(static_cast<int>(n), e);
}

Graph johnson(int n, int k) {
  if (k < 1 || k > n) throw DomainError("johnson needs 1 <= k <= n");
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      subsets.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  if (subsets.size() > 5000) throw DomainError("johnson graph too large");
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      std::vector<int> both;
      std::set_intersection(subsets[i].begin(), subsets[i].end(), subsets[j].begin(), subsets[j].end(), std::back_inserter(both));
      if (static_cast<int>(both.size()) == k - 1) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return Graph(static_cast<int>(subsets.size()), e);
}

Graph cube(int d) { return hamming(d, 2); }

Graph icosahedron() {
  // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= 5; ++i) {
    const int nxt = i % 5 + 1;
    e.emplace_back(0, i);
    e.emplace_back(std::min(i, nxt), std::max(i, nxt));
    e.emplace_back(i + 5, 11);
    e.emplace_back(std::min(i, nxt) + 5, std::max(i, nxt) + 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i, nxt + 5);
  }
  return Graph(12, e);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("complete bipartite needs positive sides");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

Graph complete(int n) {
  if (n < 1) throw DomainError("complete graph needs a vertex");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

SymmetricDesign fano() {
  return {7, 3, 1, {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {0, 4, 5}, {1, 5, 6}, {0, 2, 6}}};
}

SymmetricDesign biplane_11() {
  return {11,
          5,
          2,
          {{1, 3, 4, 5, 9},
           {2, 4, 5, 6, 10},
           {0, 3, 5, 6, 7},
           {1, 4, 6, 7, 8},
           {2, 5, 7, 8, 9},
           {3, 6, 8, 9, 10},
           {0, 4, 7, 9, 10},
           {0, 1, 5, 8, 10},
           {0, 1, 2, 6, 9},
           {1, 2, 3, 7, 10},
           {0, 2, 3, 4, 8}}};
}

Graph incidence_graph(const SymmetricDesign& d) {
  validate_design(d);
  std::vector<std::pair<int, int>> e;
  for (int b = 0; b < d.v; ++b)
    for (int p : d.blocks[static_cast<std::size_t>(b)]) e.emplace_back(p, d.v + b);
  std::sort(e.begin(), e.end());
  return Graph(2 * d.v, e);
}

Graph heawood() { return incidence_graph(fano()); }

Graph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n) throw DomainError("generalized Petersen graph needs n >= 3 and 1 <= k < n/2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n + i);
    e.emplace_back(n + i, n + (i + k) % n);
  }
  return Graph(2 * n, e);
}

Graph dodecahedron() { return generalized_petersen(10, 2); }

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  std::vector<std::pair<int, int>> e;
  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const auto [u, v] = edges[a];
      const auto [x, y] = edges[b];
      if (u == x || u == y || v == x || v == y) e.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return Graph(static_cast<int>(edges.size()), e);
}

Graph graph_by_name(const std::string& name) {
  static const std::map<std::string, Graph (*)()> fixed{
      {"petersen", petersen},
      {"heawood", heawood},
      {"icosahedron", icosahedron},
      {"biplane11", [] { return incidence_graph(biplane_11()); }},
      {"dodecahedron", dodecahedron},
      {"desargues", [] { return generalized_petersen(10, 3); }},
      {"line_petersen", [] { return line_graph(petersen()); }},
  };
  if (auto it = fixed.find(name); it != fixed.end()) return it->second();
  std::smatch m;
  static const std::regex one(R"(^(c|cube|k)(\d+)$)");
  static const std::regex two(R"(^(h|j|k|gp)(\d+)[,_](\d+)$)");
  if (name == "cube") return cube(3);
  if (std::regex_match(name, m, one)) {
    const int a = std::stoi(m[2]);
    if (m[1] == "c") return cycle(a);
    if (m[1] == "cube") return cube(a);
    return complete(a);
  }
  if (std::regex_match(name, m, two)) {
    const int a = std::stoi(m[2]), b = std::stoi(m[3]);
    if (m[1] == "h") return hamming(a, b);
    if (m[1] == "j") return johnson(a, b);
    if (m[1] == "gp") return generalized_petersen(a, b);
    return complete_bipartite(a, b);
  }
  throw DomainError("unknown graph family: " + name);
}

std::vector<std::string> graph_names() {
  return {"petersen", "heawood", "icosahedron", "biplane11", "dodecahedron", "desargues", "line_petersen", "cube", "cube<d>", "c<n>", "k<n>", "k<a>_<b>", "h<d>_<q>", "j<n>_<k>", "gp<n>_<k>"};
}

}  // namespace qpoly::families
