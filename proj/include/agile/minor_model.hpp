#pragma once

#include <map>
#include <string>

#include "agile/graph.hpp"

namespace agile {

/// Witness that `pattern` is a minor of some host graph: one nonempty,
/// connected branch set per pattern vertex, pairwise disjoint, with every
/// pattern edge realized by a host edge between the two branch sets.
struct MinorModel {
    Graph pattern;
    std::map<int, VertexSet> branch;
};

struct ModelCheck {
    bool ok = true;
    std::string violation;  // first violated clause, empty when ok
};

ModelCheck validate_minor_model(const Graph& host, const MinorModel& model);

/// Minimum-id representative of each branch set of X_pattern.
VertexSet lift_through_minor(const MinorModel& model, const VertexSet& x_pattern);

}  // namespace agile
