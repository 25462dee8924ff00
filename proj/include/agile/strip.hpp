#pragma once

#include <utility>
#include <vector>

#include "agile/generators.hpp"
#include "agile/graph.hpp"

namespace agile {

/// A strip: cycle 0..cycle_len-1, two disjoint distinguished cycle edges
/// ab = (ab_pos, ab_pos+1) and cd = (cd_pos, cd_pos+1), and chords joining
/// the two paths of C - {ab, cd}. Every chord is crossed by at most one
/// other chord, and crossing pairs are braced by cycle edges. Either
/// distinguished edge may be deleted as long as the minimum degree stays
/// at least 2.
struct StripSpec {
    int cycle_len = 0;
    int ab_pos = 0;
    int cd_pos = 0;
    std::vector<std::pair<int, int>> chords;
    bool delete_ab = false;
    bool delete_cd = false;

    int a() const { return ab_pos; }
    int b() const { return (ab_pos + 1) % cycle_len; }
    int c() const { return cd_pos; }
    int d() const { return (cd_pos + 1) % cycle_len; }

    /// Path from a to d avoiding ab and cd (descending cycle positions).
    std::vector<int> path1() const;
    /// Path from b to c (ascending cycle positions).
    std::vector<int> path2() const;
};

/// Two chords whose endpoints interleave along the cycle.
struct CrossingPair {
    std::pair<int, int> chord1;
    std::pair<int, int> chord2;
};

/// Throws with the offending chord or pair when the spec breaks a strip
/// invariant.
void validate_strip_spec(const StripSpec& spec);

/// All crossing chord pairs; each chord appears in at most one.
std::vector<CrossingPair> crossing_pairs(const StripSpec& spec);

/// Maximal size of a set of pairwise non-crossing chords with pairwise
/// disjoint endpoints.
int strip_length(const StripSpec& spec);

/// Realize the spec as a graph on the cycle positions. Role "corners".
LabeledGraph strip(const StripSpec& spec);

/// A regular strip of length k expressed as a StripSpec (both
/// distinguished edges deleted).
StripSpec regular_strip_spec(int k);

/// A StripSpec together with the map cycle position -> host vertex.
struct EmbeddedStrip {
    StripSpec spec;
    std::vector<int> host_vertex;
};

/// counterexample_graph(n) read as a strip: the outer cycle through both
/// rows, corners {w_1, r_0, r_n, w_{n-1}}, and the remaining diagonals as
/// chords. host_vertex maps cycle positions to counterexample ids.
EmbeddedStrip counterexample_strip(int n);

}  // namespace agile
