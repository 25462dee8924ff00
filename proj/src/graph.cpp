#include "agile/graph.hpp"

#include <algorithm>
#include <numeric>

namespace agile {

VertexSet::VertexSet(std::initializer_list<int> ids) : VertexSet(std::vector<int>(ids)) {}

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
}

int VertexSet::min() const {
    if (ids_.empty()) throw std::logic_error("min() of empty vertex set");
    return ids_.front();
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
    std::vector<int> out;
    out.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out));
    VertexSet r;
    r.ids_ = std::move(out);
    return r;
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const {
    std::vector<int> out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                          std::back_inserter(out));
    VertexSet r;
    r.ids_ = std::move(out);
    return r;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
    std::vector<int> out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
    VertexSet r;
    r.ids_ = std::move(out);
    return r;
}

bool VertexSet::subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

std::string VertexSet::to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < ids_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ids_[i]);
    }
    return s + "}";
}

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::vertices() const {
    std::vector<int> all(n_);
    std::iota(all.begin(), all.end(), 0);
    return VertexSet(std::move(all));
}

std::vector<int> MappedGraph::inverse(int old_n) const {
    std::vector<int> inv(old_n, -1);
    for (size_t i = 0; i < original.size(); ++i) inv[original[i]] = static_cast<int>(i);
    return inv;
}

bool RootedTree::is_ancestor(int a, int b) const {
    while (b != -1) {
        if (b == a) return true;
        b = parent[b];
    }
    return false;
}

std::vector<VertexSet> components(const Graph& g) {
    return components_within(g, std::vector<char>(g.vertex_count(), 1));
}

std::vector<VertexSet> components_within(const Graph& g, const std::vector<char>& allowed) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (!allowed[s] || comp[s] != -1) continue;
        std::vector<int> members;
        stack.push_back(s);
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int w : g.neighbors(u)) {
                if (allowed[w] && comp[w] == -1) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
            }
        }
        out.emplace_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return components(g).size() == 1;
}

VertexSet cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("cut_vertices: graph is disconnected");
    const int n = g.vertex_count();
    // Tarjan lowpoint computation, iterative to be safe on long paths.
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<char> articulation(n, 0);
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            auto& [u, idx] = stack.back();
            if (idx < g.neighbors(u).size()) {
                int w = g.neighbors(u)[idx++];
                if (disc[w] == -1) {
                    parent[w] = u;
                    if (u == root) ++root_children;
                    disc[w] = low[w] = timer++;
                    stack.emplace_back(w, 0);
                } else if (w != parent[u]) {
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[u]);
                    if (p != root && low[u] >= disc[p]) articulation[p] = 1;
                }
            }
        }
        if (root_children > 1) articulation[root] = 1;
    }
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (articulation[v]) out.insert(v);
    return out;
}

bool is_2connected(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    if (!is_connected(g)) return false;
    return cut_vertices(g).empty();
}

bool is_3connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 4) return false;
    if (!is_connected(g)) return false;
    std::vector<char> allowed(n, 1);
    for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) {
            allowed.assign(n, 1);
            allowed[u] = 0;
            allowed[v] = 0;
            if (components_within(g, allowed).size() > 1) return false;
        }
    }
    return true;
}

SurgeryResult contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("contract_edge: " + std::to_string(u) + "-" +
                                    std::to_string(v) + " is not an edge");
    if (u > v) std::swap(u, v);
    const int n = g.vertex_count();
    std::vector<int> map(n);
    for (int w = 0; w < n; ++w) {
        if (w == v)
            map[w] = u;
        else
            map[w] = w < v ? w : w - 1;
    }
    Graph h(n - 1);
    for (auto [a, b] : g.edges()) {
        int x = map[a], y = map[b];
        if (x != y) h.add_edge(x, y);
    }
    return {std::move(h), std::move(map)};
}

SurgeryResult delete_vertex(const Graph& g, int v) {
    const int n = g.vertex_count();
    if (v < 0 || v >= n) throw std::invalid_argument("delete_vertex: out of range");
    std::vector<int> map(n);
    for (int w = 0; w < n; ++w) map[w] = w == v ? -1 : (w < v ? w : w - 1);
    Graph h(n - 1);
    for (auto [a, b] : g.edges())
        if (a != v && b != v) h.add_edge(map[a], map[b]);
    return {std::move(h), std::move(map)};
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("delete_edge: " + std::to_string(u) + "-" +
                                    std::to_string(v) + " is not an edge");
    Graph h(g.vertex_count());
    if (u > v) std::swap(u, v);
    for (auto [a, b] : g.edges())
        if (!(a == u && b == v)) h.add_edge(a, b);
    return h;
}

MappedGraph induced_subgraph(const Graph& g, const VertexSet& part) {
    for (int v : part)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::vector<int> original(part.begin(), part.end());
    std::vector<int> inv(g.vertex_count(), -1);
    for (size_t i = 0; i < original.size(); ++i) inv[original[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(original.size()));
    for (auto [a, b] : g.edges())
        if (inv[a] != -1 && inv[b] != -1) h.add_edge(inv[a], inv[b]);
    return {std::move(h), std::move(original)};
}

MappedGraph torso(const Graph& g, const VertexSet& part, const VertexSet& interface) {
    if (!interface.subset_of(part))
        throw std::invalid_argument("torso: interface is not contained in part");
    MappedGraph sub = induced_subgraph(g, part);
    auto inv = sub.inverse(g.vertex_count());
    const auto& ids = interface.ids();
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j)
            sub.graph.add_edge(inv[ids[i]], inv[ids[j]]);
    return sub;
}

RootedTree normal_spanning_tree(const Graph& g, int root) {
    if (root < 0 || root >= g.vertex_count())
        throw std::invalid_argument("normal_spanning_tree: root out of range");
    if (!is_connected(g))
        throw std::invalid_argument("normal_spanning_tree: graph is disconnected");
    RootedTree t;
    t.root = root;
    t.parent.assign(g.vertex_count(), -2);
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    t.parent[root] = -1;
    while (!stack.empty()) {
        auto& [u, idx] = stack.back();
        if (idx < g.neighbors(u).size()) {
            int w = g.neighbors(u)[idx++];
            if (t.parent[w] == -2) {
                t.parent[w] = u;
                stack.emplace_back(w, 0);
            }
        } else {
            stack.pop_back();
        }
    }
    return t;
}

bool is_internally_3_connected(const Graph& g) {
    const int n = g.vertex_count();
    VertexSet deg2;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 2) deg2.insert(v);
    // Subdivision vertices must be pairwise non-adjacent.
    for (int v : deg2)
        for (int w : g.neighbors(v))
            if (deg2.contains(w)) return false;
    // Suppress them, refusing any would-be parallel edge: two subdivision
    // vertices with the same neighbor pair, or a suppressed edge that
    // already exists, would mean some edge was subdivided twice.
    VertexSet rest = g.vertices().set_difference(deg2);
    MappedGraph sub = induced_subgraph(g, rest);
    auto inv = sub.inverse(n);
    for (int v : deg2) {
        int a = inv[g.neighbors(v)[0]];
        int b = inv[g.neighbors(v)[1]];
        if (sub.graph.has_edge(a, b)) return false;
        sub.graph.add_edge(a, b);
    }
    return is_3connected(sub.graph);
}

}  // namespace agile
