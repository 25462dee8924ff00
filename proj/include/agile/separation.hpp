#pragma once

#include <array>

#include "agile/graph.hpp"

namespace agile {

/// Oriented separation (A,B): A u B = V and no edge joins A\B to B\A.
struct Separation {
    VertexSet a;
    VertexSet b;

    int order() const { return a.set_intersection(b).size(); }
    VertexSet separator() const { return a.set_intersection(b); }
    Separation involution() const { return {b, a}; }

    bool operator==(const Separation&) const = default;
    bool operator<(const Separation& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

/// Throws when (a,b) is not a separation of g.
void validate_separation(const Graph& g, const Separation& s);

/// (A,B) <= (C,D) iff A <= C and B >= D.
bool separation_leq(const Separation& s, const Separation& t);

/// Nested iff one of the four orientation comparisons holds.
bool nested(const Separation& s, const Separation& t);

/// The four quadrants V\(B u D), V\(A u D), V\(B u C), V\(A u C); a
/// crossing pair has all four nonempty.
std::array<VertexSet, 4> quadrants(const Graph& g, const Separation& s, const Separation& t);

/// All separations of order exactly 2 with both sides proper, in both
/// orientations, found by enumerating 2-element cutsets and unions of the
/// resulting components. Throws (naming a cut vertex) unless g is
/// 2-connected.
std::vector<Separation> order2_separations(const Graph& g);

}  // namespace agile
