#pragma once

#include <string>
#include <vector>

#include "qpoly/graphs/graph.hpp"

namespace qpoly::families {

using graphs::Graph;

/// Symmetric 2-(v,k,lambda) design as an explicit block list.
struct SymmetricDesign {
  int v = 0;
  int k = 0;
  int lambda = 0;
  std::vector<std::vector<int>> blocks;
};

/// Throws SemanticError naming the failed axiom.
void validate_design(const SymmetricDesign& d);

Graph cycle(int n);
Graph petersen();
/// H(d, q): words of length d over q symbols, adjacent when they differ in
/// one coordinate. Words are numbered as base-q integers.
Graph hamming(int d, int q);
/// J(n, k): k-subsets of n, adjacent when they share k-1 elements;
/// subsets in lexicographic order.
Graph johnson(int n, int k);
Graph cube(int d);
Graph icosahedron();
Graph complete_bipartite(int a, int b);
Graph complete(int n);
/// GP(n, k): outer cycle 0..n-1, spokes i to n+i, inner n+i to n+(i+k)%n.
Graph generalized_petersen(int n, int k);
Graph dodecahedron();
/// Vertices are the edges of g in the order of g.edges().
Graph line_graph(const Graph& g);
SymmetricDesign fano();
SymmetricDesign biplane_11();
/// Points 0..v-1, blocks v..2v-1.
Graph incidence_graph(const SymmetricDesign& d);
Graph heawood();

/// Graph builders addressable by name: "petersen", "c5", "heawood",
/// "icosahedron", "cube", "k3_3", "h4_2", "biplane11", "j5_2", "gp10_3", ...
Graph graph_by_name(const std::string& name);
std::vector<std::string> graph_names();

}  // namespace qpoly::families
