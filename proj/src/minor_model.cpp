#include "agile/minor_model.hpp"

#include "agile/graph.hpp"

namespace agile {

ModelCheck validate_minor_model(const Graph& host, const MinorModel& model) {
    const int k = model.pattern.vertex_count();
    for (int p = 0; p < k; ++p)
        if (!model.branch.count(p))
            return {false, "missing branch set for pattern vertex " + std::to_string(p)};
    if (static_cast<int>(model.branch.size()) != k)
        return {false, "branch map mentions vertices outside the pattern"};

    std::vector<int> owner(host.vertex_count(), -1);
    for (const auto& [p, set] : model.branch) {
        if (set.empty()) return {false, "empty branch set for pattern vertex " + std::to_string(p)};
        for (int v : set) {
            if (v < 0 || v >= host.vertex_count())
                return {false, "branch set of " + std::to_string(p) + " leaves the host"};
            if (owner[v] != -1)
                return {false, "disjointness: host vertex " + std::to_string(v) +
                                   " in branch sets " + std::to_string(owner[v]) + " and " +
                                   std::to_string(p)};
            owner[v] = p;
        }
    }
    for (const auto& [p, set] : model.branch) {
        if (components(induced_subgraph(host, set).graph).size() > 1)
            return {false, "connectivity: branch set of " + std::to_string(p) + " = " +
                               set.to_string() + " is disconnected"};
    }
    for (auto [a, b] : model.pattern.edges()) {
        bool found = false;
        for (int u : model.branch.at(a)) {
            for (int v : host.neighbors(u))
                if (owner[v] == b) {
                    found = true;
                    break;
                }
            if (found) break;
        }
        if (!found)
            return {false, "edge coverage: no host edge between branch sets of " +
                               std::to_string(a) + " and " + std::to_string(b)};
    }
    return {};
}

VertexSet lift_through_minor(const MinorModel& model, const VertexSet& x_pattern) {
    VertexSet out;
    for (int p : x_pattern) {
        auto it = model.branch.find(p);
        if (it == model.branch.end())
            throw std::invalid_argument("lift_through_minor: vertex " + std::to_string(p) +
                                        " has no branch set");
        out.insert(it->second.min());
    }
    return out;
}

}  // namespace agile
