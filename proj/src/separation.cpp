#include "agile/separation.hpp"

#include <algorithm>

namespace agile {

void validate_separation(const Graph& g, const Separation& s) {
    if (s.a.set_union(s.b) != g.vertices())
        throw std::invalid_argument("separation sides do not cover V");
    VertexSet only_a = s.a.set_difference(s.b);
    VertexSet only_b = s.b.set_difference(s.a);
    for (int u : only_a)
        for (int v : g.neighbors(u))
            if (only_b.contains(v))
                throw std::invalid_argument("edge " + std::to_string(u) + "-" +
                                            std::to_string(v) + " crosses the separation");
}

bool separation_leq(const Separation& s, const Separation& t) {
    return s.a.subset_of(t.a) && t.b.subset_of(s.b);
}

bool nested(const Separation& s, const Separation& t) {
    const Separation si = s.involution();
    const Separation ti = t.involution();
    return separation_leq(s, t) || separation_leq(s, ti) || separation_leq(si, t) ||
           separation_leq(si, ti);
}

std::array<VertexSet, 4> quadrants(const Graph& g, const Separation& s, const Separation& t) {
    const VertexSet all = g.vertices();
    return {all.set_difference(s.b.set_union(t.b)), all.set_difference(s.a.set_union(t.b)),
            all.set_difference(s.b.set_union(t.a)), all.set_difference(s.a.set_union(t.a))};
}

std::vector<Separation> order2_separations(const Graph& g) {
    const int n = g.vertex_count();
    if (!is_connected(g)) throw std::invalid_argument("order2_separations: graph disconnected");
    if (n < 3 || !cut_vertices(g).empty()) {
        std::string cut = n >= 3 && is_connected(g) ? cut_vertices(g).to_string() : "{}";
        throw std::invalid_argument("order2_separations: graph is not 2-connected, cut vertices " +
                                    cut);
    }
    std::vector<Separation> out;
    std::vector<char> allowed(n, 1);
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            allowed.assign(n, 1);
            allowed[x] = allowed[y] = 0;
            auto comps = components_within(g, allowed);
            const int c = static_cast<int>(comps.size());
            if (c < 2) continue;
            VertexSet cut{x, y};
            // Every union of a nonempty proper subset of components forms
            // one side; iterating all masks yields both orientations.
            for (unsigned mask = 1; mask + 1 < (1u << c); ++mask) {
                VertexSet a = cut;
                VertexSet b = cut;
                for (int i = 0; i < c; ++i) {
                    if (mask >> i & 1)
                        a = a.set_union(comps[i]);
                    else
                        b = b.set_union(comps[i]);
                }
                out.push_back({std::move(a), std::move(b)});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace agile
