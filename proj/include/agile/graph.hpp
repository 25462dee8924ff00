#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace agile {

/// Sorted set of vertex ids with value semantics.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> ids);
    explicit VertexSet(std::vector<int> ids);

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);

    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    int min() const;

    VertexSet set_union(const VertexSet& other) const;
    VertexSet set_intersection(const VertexSet& other) const;
    VertexSet set_difference(const VertexSet& other) const;
    bool subset_of(const VertexSet& other) const;

    const std::vector<int>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool operator==(const VertexSet&) const = default;
    bool operator<(const VertexSet& other) const { return ids_ < other.ids_; }

    std::string to_string() const;

private:
    std::vector<int> ids_;  // sorted, unique
};

/// Simple undirected graph on dense vertex ids 0..n-1.
/// No loops, no parallel edges; adjacency lists kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// All edges as (u,v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    VertexSet vertices() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// A graph derived from another one, with `original[new_id] = old_id`.
struct MappedGraph {
    Graph graph;
    std::vector<int> original;

    /// Old id -> new id, or -1 when the vertex was dropped.
    std::vector<int> inverse(int old_n) const;
};

/// Result of an edge contraction or vertex deletion: the new graph plus
/// the old->new vertex map (-1 for removed vertices).
struct SurgeryResult {
    Graph graph;
    std::vector<int> vertex_map;
};

/// Rooted spanning tree given by a parent array (parent[root] == -1).
struct RootedTree {
    int root = 0;
    std::vector<int> parent;

    bool is_ancestor(int a, int b) const;  // a on the root-b path (a == b counts)
    bool comparable(int a, int b) const { return is_ancestor(a, b) || is_ancestor(b, a); }
};

// -- connectivity ----------------------------------------------------------

/// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Components of the subgraph induced on `allowed[v] == true`.
std::vector<VertexSet> components_within(const Graph& g, const std::vector<char>& allowed);

bool is_connected(const Graph& g);

/// All cut vertices of a connected graph. Throws if g is disconnected.
VertexSet cut_vertices(const Graph& g);

bool is_2connected(const Graph& g);

/// Brute-force 3-connectivity: n >= 4 and no separator of size <= 2.
bool is_3connected(const Graph& g);

// -- surgery ---------------------------------------------------------------

/// Contract edge uv; the merged vertex keeps id min(u,v), ids above
/// max(u,v) shift down. Parallel edges collapse, loops are dropped.
SurgeryResult contract_edge(const Graph& g, int u, int v);

SurgeryResult delete_vertex(const Graph& g, int v);

Graph delete_edge(const Graph& g, int u, int v);

MappedGraph induced_subgraph(const Graph& g, const VertexSet& part);

/// Induced subgraph on `part` with `interface` turned into a clique.
/// Requires interface <= part <= V.
MappedGraph torso(const Graph& g, const VertexSet& part, const VertexSet& interface);

// -- spanning trees --------------------------------------------------------

/// Depth-first spanning tree; every graph edge joins tree-comparable
/// vertices. Throws if g is disconnected.
RootedTree normal_spanning_tree(const Graph& g, int root);

// -- structure tests -------------------------------------------------------

/// True iff g arises from a 3-connected graph (on >= 4 vertices) by
/// subdividing each edge at most once: the degree-2 vertices are
/// independent and suppressing them yields a simple 3-connected graph.
bool is_internally_3_connected(const Graph& g);

}  // namespace agile
