#pragma once

#include <map>
#include <string>

#include "agile/graph.hpp"

namespace agile {

/// A generated graph together with its distinguished vertex sets
/// ("hubs", "red", "corners", ...). Role labels are documented per
/// generator.
struct LabeledGraph {
    Graph graph;
    std::map<std::string, VertexSet> roles;
};

/// K_{m,k}; roles "hubs" (size m) and "leaves" (size k).
LabeledGraph complete_bipartite(int m, int k);

/// The double-row graph on r_0..r_n (ids 0..n) and w_1..w_{n-1}
/// (ids n+1..2n-1): both row paths plus the diagonals w_i r_{i+1} and
/// w_i r_{i-1} for 1 <= i <= n-1. Roles "red" and "white".
LabeledGraph counterexample_graph(int n);

/// Two k-paths v_1..v_k (ids 0..k-1) and w_1..w_k (ids k..2k-1) with both
/// diagonals on every rung. Roles "bottom", "top",
/// "corners" = {v_1,w_1,v_k,w_k}.
LabeledGraph regular_strip(int k);

/// Cycle 0..cycle_len-1 plus chords from the center b = 0 to the given
/// cycle positions. Corners are {cycle_len-1, 0, 1}; roles "center",
/// "corners". Chord targets must avoid b and its cycle neighbors.
LabeledGraph fan(int cycle_len, const std::vector<int>& chord_targets);

/// The n x 2 grid; vertex (x,y) has id 2x+y. Roles "rail0", "rail1",
/// "ends" = the four corner vertices. With clique_ends the four end
/// vertices become a clique.
LabeledGraph ladder(int n, bool clique_ends);

/// rows x cols grid; vertex (r,c) has id r*cols + c.
LabeledGraph grid(int rows, int cols);

/// The (2m-1) x ((N-1)m+1) grid with role "agile": N middle-row vertices
/// with column spacing m.
LabeledGraph grid_magile_instance(int m, int N);

/// The N^2 x N^2 grid with role "dexterous": marks at (jN, jN) for
/// 0 <= j < N.
LabeledGraph diagonal_dexterous_instance(int N);

/// n >= 3 cyclically rail-linked copies of the tree given by tree_edges,
/// wrap edges v_n -> pi(v)_1, plus one hub per entry of psi adjacent to
/// every copy of its tree vertex. Copy i of tree vertex v has id i*t + v;
/// hub j has id n*t + j. Role "hub".
LabeledGraph wheel(const std::vector<std::pair<int, int>>& tree_edges,
                   const std::vector<int>& pi, const std::vector<int>& psi, int n);

}  // namespace agile
