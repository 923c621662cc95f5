#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qpoly::graphs {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  /// Throws SemanticError on loops, repeated edges or out-of-range vertices.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool is_connected() const;
  /// Common degree if every vertex has the same degree.
  std::optional<int> regular_degree() const;
  bool is_complete() const;
  bool is_bipartite() const;
  /// BFS distances from x (-1 when unreachable).
  std::vector<int> distances(int x) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edges_ = 0;
};

/// Decodes one graph6 string (optional ">>graph6<<" header, optional
/// trailing newline). Throws ParseError with the byte offset.
Graph parse_graph6(std::string_view text);
/// Encodes without header or newline.
std::string emit_graph6(const Graph& g);

/// {"n": int, "edges": [[u, v], ...]}.
Graph parse_json_graph(std::string_view text);
std::string emit_json_graph(const Graph& g);

/// Whether a and b are isomorphic (refinement plus backtracking).
bool isomorphic(const Graph& a, const Graph& b);

/// Uniform pairing-model k-regular graph on n vertices, redrawn until
/// simple and connected.
Graph random_regular(int n, int k, std::uint64_t seed);

}  // namespace qpoly::graphs
