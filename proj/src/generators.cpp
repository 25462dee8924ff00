#include "agile/generators.hpp"

#include <algorithm>
#include <numeric>

namespace agile {

LabeledGraph complete_bipartite(int m, int k) {
    if (m < 1 || k < 1) throw std::invalid_argument("complete_bipartite: sizes must be positive");
    LabeledGraph out{Graph(m + k), {}};
    VertexSet hubs, leaves;
    for (int i = 0; i < m; ++i) hubs.insert(i);
    for (int j = 0; j < k; ++j) leaves.insert(m + j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) out.graph.add_edge(i, m + j);
    out.roles["hubs"] = hubs;
    out.roles["leaves"] = leaves;
    return out;
}

LabeledGraph counterexample_graph(int n) {
    if (n < 3) throw std::invalid_argument("counterexample_graph: need n >= 3");
    // r_i = i for 0 <= i <= n, w_i = n + i for 1 <= i <= n-1.
    const auto r = [](int i) { return i; };
    const auto w = [n](int i) { return n + i; };
    LabeledGraph out{Graph(2 * n), {}};
    for (int i = 0; i < n; ++i) out.graph.add_edge(r(i), r(i + 1));
    for (int i = 1; i < n - 1; ++i) out.graph.add_edge(w(i), w(i + 1));
    for (int i = 1; i <= n - 1; ++i) {
        out.graph.add_edge(w(i), r(i + 1));
        out.graph.add_edge(w(i), r(i - 1));
    }
    VertexSet red, white;
    for (int i = 0; i <= n; ++i) red.insert(r(i));
    for (int i = 1; i <= n - 1; ++i) white.insert(w(i));
    out.roles["red"] = red;
    out.roles["white"] = white;
    return out;
}

LabeledGraph regular_strip(int k) {
    if (k < 2) throw std::invalid_argument("regular_strip: need k >= 2");
    const auto v = [](int i) { return i - 1; };
    const auto w = [k](int i) { return k + i - 1; };
    LabeledGraph out{Graph(2 * k), {}};
    for (int i = 1; i < k; ++i) {
        out.graph.add_edge(v(i), v(i + 1));
        out.graph.add_edge(w(i), w(i + 1));
        out.graph.add_edge(v(i), w(i + 1));
        out.graph.add_edge(w(i), v(i + 1));
    }
    VertexSet bottom, top;
    for (int i = 1; i <= k; ++i) {
        bottom.insert(v(i));
        top.insert(w(i));
    }
    out.roles["bottom"] = bottom;
    out.roles["top"] = top;
    out.roles["corners"] = VertexSet{v(1), w(1), v(k), w(k)};
    return out;
}

LabeledGraph fan(int cycle_len, const std::vector<int>& chord_targets) {
    if (cycle_len < 4) throw std::invalid_argument("fan: need cycle length >= 4");
    LabeledGraph out{Graph(cycle_len), {}};
    for (int i = 0; i < cycle_len; ++i) out.graph.add_edge(i, (i + 1) % cycle_len);
    const int b = 0;
    for (int t : chord_targets) {
        if (t <= 1 || t >= cycle_len - 1)
            throw std::invalid_argument("fan: chord target " + std::to_string(t) +
                                        " is the center or a cycle neighbor of it");
        out.graph.add_edge(b, t);
    }
    out.roles["center"] = VertexSet{b};
    out.roles["corners"] = VertexSet{cycle_len - 1, b, 1};
    return out;
}

LabeledGraph ladder(int n, bool clique_ends) {
    if (n < 2) throw std::invalid_argument("ladder: need length >= 2");
    const auto id = [](int x, int y) { return 2 * x + y; };
    LabeledGraph out{Graph(2 * n), {}};
    for (int x = 0; x < n; ++x) {
        out.graph.add_edge(id(x, 0), id(x, 1));
        if (x + 1 < n) {
            out.graph.add_edge(id(x, 0), id(x + 1, 0));
            out.graph.add_edge(id(x, 1), id(x + 1, 1));
        }
    }
    std::vector<int> ends = {id(0, 0), id(0, 1), id(n - 1, 0), id(n - 1, 1)};
    if (clique_ends)
        for (size_t i = 0; i < ends.size(); ++i)
            for (size_t j = i + 1; j < ends.size(); ++j) out.graph.add_edge(ends[i], ends[j]);
    VertexSet rail0, rail1;
    for (int x = 0; x < n; ++x) {
        rail0.insert(id(x, 0));
        rail1.insert(id(x, 1));
    }
    out.roles["rail0"] = rail0;
    out.roles["rail1"] = rail1;
    out.roles["ends"] = VertexSet(ends);
    return out;
}

LabeledGraph grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid: sizes must be positive");
    LabeledGraph out{Graph(rows * cols), {}};
    const auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) out.graph.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) out.graph.add_edge(id(r, c), id(r + 1, c));
        }
    return out;
}

LabeledGraph grid_magile_instance(int m, int N) {
    if (m < 2 || N < 2) throw std::invalid_argument("grid_magile_instance: need m,N >= 2");
    const int rows = 2 * m - 1;
    const int cols = (N - 1) * m + 1;
    LabeledGraph out = grid(rows, cols);
    VertexSet marked;
    for (int j = 0; j < N; ++j) marked.insert((m - 1) * cols + j * m);
    out.roles["agile"] = marked;
    return out;
}

LabeledGraph diagonal_dexterous_instance(int N) {
    if (N < 2) throw std::invalid_argument("diagonal_dexterous_instance: need N >= 2");
    const int side = N * N;
    LabeledGraph out = grid(side, side);
    VertexSet marked;
    for (int j = 0; j < N; ++j) marked.insert(j * N * side + j * N);
    out.roles["dexterous"] = marked;
    return out;
}

LabeledGraph wheel(const std::vector<std::pair<int, int>>& tree_edges,
                   const std::vector<int>& pi, const std::vector<int>& psi, int n) {
    const int t = static_cast<int>(pi.size());
    if (t < 1) throw std::invalid_argument("wheel: tree must have at least one vertex");
    if (n < 3) throw std::invalid_argument("wheel: need n >= 3 copies");
    if (static_cast<int>(tree_edges.size()) != t - 1)
        throw std::invalid_argument("wheel: tree_edges is not a tree on " + std::to_string(t) +
                                    " vertices");
    {
        Graph tree(t);
        for (auto [u, v] : tree_edges) tree.add_edge(u, v);
        if (!is_connected(tree)) throw std::invalid_argument("wheel: tree_edges is not a tree");
    }
    std::vector<int> seen(t, 0);
    for (int v : pi) {
        if (v < 0 || v >= t || seen[v]++)
            throw std::invalid_argument("wheel: pi is not a permutation");
    }
    const int l = static_cast<int>(psi.size());
    for (int v : psi)
        if (v < 0 || v >= t) throw std::invalid_argument("wheel: psi maps outside the tree");

    const auto copy = [t](int i, int v) { return i * t + v; };  // copy index i in 0..n-1
    LabeledGraph out{Graph(n * t + l), {}};
    for (int i = 0; i < n; ++i)
        for (auto [u, v] : tree_edges) out.graph.add_edge(copy(i, u), copy(i, v));
    for (int v = 0; v < t; ++v) {
        for (int i = 0; i + 1 < n; ++i) out.graph.add_edge(copy(i, v), copy(i + 1, v));
        out.graph.add_edge(copy(n - 1, v), copy(0, pi[v]));
    }
    VertexSet hubs;
    for (int z = 0; z < l; ++z) {
        const int hub = n * t + z;
        hubs.insert(hub);
        for (int i = 0; i < n; ++i) out.graph.add_edge(hub, copy(i, psi[z]));
    }
    out.roles["hub"] = hubs;
    return out;
}

}  // namespace agile
