#include "agile/strip.hpp"

#include <algorithm>
#include <functional>

namespace agile {

namespace {

std::string chord_str(std::pair<int, int> e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

bool cycle_adjacent(int len, int u, int v) {
    return (u + 1) % len == v || (v + 1) % len == u;
}

/// True iff exactly one endpoint of f lies strictly inside the forward
/// arc from e.first to e.second (endpoints pairwise distinct).
bool chords_cross(int len, std::pair<int, int> e, std::pair<int, int> f) {
    int ends[4] = {e.first, e.second, f.first, f.second};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (ends[i] == ends[j]) return false;
    auto inside = [&](int x) {
        int span = (e.second - e.first + len) % len;
        int off = (x - e.first + len) % len;
        return 0 < off && off < span;
    };
    return inside(f.first) != inside(f.second);
}

}  // namespace

std::vector<int> StripSpec::path1() const {
    std::vector<int> p;
    for (int v = a();; v = (v - 1 + cycle_len) % cycle_len) {
        p.push_back(v);
        if (v == d()) break;
    }
    return p;
}

std::vector<int> StripSpec::path2() const {
    std::vector<int> p;
    for (int v = b();; v = (v + 1) % cycle_len) {
        p.push_back(v);
        if (v == c()) break;
    }
    return p;
}

void validate_strip_spec(const StripSpec& spec) {
    const int len = spec.cycle_len;
    if (len < 4) throw std::invalid_argument("strip: cycle length must be >= 4");
    if (spec.ab_pos < 0 || spec.ab_pos >= len || spec.cd_pos < 0 || spec.cd_pos >= len)
        throw std::invalid_argument("strip: distinguished edge position out of range");
    int corners[4] = {spec.a(), spec.b(), spec.c(), spec.d()};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (corners[i] == corners[j])
                throw std::invalid_argument("strip: edges ab and cd are not disjoint");

    std::vector<int> side(len, 0);
    for (int v : spec.path1()) side[v] = 1;
    for (int v : spec.path2()) side[v] = 2;

    for (auto ch : spec.chords) {
        if (ch.first < 0 || ch.first >= len || ch.second < 0 || ch.second >= len)
            throw std::invalid_argument("strip: chord " + chord_str(ch) + " out of range");
        if (ch.first == ch.second)
            throw std::invalid_argument("strip: chord " + chord_str(ch) + " is a loop");
        if (side[ch.first] == side[ch.second])
            throw std::invalid_argument("strip: chord " + chord_str(ch) +
                                        " does not join the two paths");
        if (cycle_adjacent(len, ch.first, ch.second))
            throw std::invalid_argument("strip: chord " + chord_str(ch) + " is a cycle edge");
    }
    for (size_t i = 0; i < spec.chords.size(); ++i)
        for (size_t j = i + 1; j < spec.chords.size(); ++j) {
            auto x = spec.chords[i], y = spec.chords[j];
            if (std::minmax(x.first, x.second) == std::minmax(y.first, y.second))
                throw std::invalid_argument("strip: duplicate chord " + chord_str(x));
        }

    std::vector<int> crossings(spec.chords.size(), 0);
    for (size_t i = 0; i < spec.chords.size(); ++i) {
        for (size_t j = i + 1; j < spec.chords.size(); ++j) {
            if (!chords_cross(len, spec.chords[i], spec.chords[j])) continue;
            if (++crossings[i] > 1 || ++crossings[j] > 1)
                throw std::invalid_argument("strip: chord " +
                                            chord_str(spec.chords[crossings[i] > 1 ? i : j]) +
                                            " is crossed by more than one chord (pair " +
                                            chord_str(spec.chords[i]) + " / " +
                                            chord_str(spec.chords[j]) + ")");
            // Crossing chords f1f2, f3f4 need f1f3 and f2f4 (or f1f4 and
            // f2f3) to be cycle edges.
            auto [f1, f2] = spec.chords[i];
            auto [f3, f4] = spec.chords[j];
            bool braced = (cycle_adjacent(len, f1, f3) && cycle_adjacent(len, f2, f4)) ||
                          (cycle_adjacent(len, f1, f4) && cycle_adjacent(len, f2, f3));
            if (!braced)
                throw std::invalid_argument("strip: crossing pair " + chord_str(spec.chords[i]) +
                                            " / " + chord_str(spec.chords[j]) +
                                            " is not braced by cycle edges");
        }
    }

    if (spec.delete_ab || spec.delete_cd) {
        LabeledGraph g = strip(spec);
        for (int v = 0; v < g.graph.vertex_count(); ++v)
            if (g.graph.degree(v) < 2)
                throw std::invalid_argument("strip: deleting distinguished edges leaves vertex " +
                                            std::to_string(v) + " with degree < 2");
    }
}

std::vector<CrossingPair> crossing_pairs(const StripSpec& spec) {
    validate_strip_spec(spec);
    std::vector<CrossingPair> out;
    for (size_t i = 0; i < spec.chords.size(); ++i)
        for (size_t j = i + 1; j < spec.chords.size(); ++j)
            if (chords_cross(spec.cycle_len, spec.chords[i], spec.chords[j]))
                out.push_back({spec.chords[i], spec.chords[j]});
    return out;
}

int strip_length(const StripSpec& spec) {
    validate_strip_spec(spec);
    const int k = static_cast<int>(spec.chords.size());
    std::vector<std::vector<char>> conflict(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            auto x = spec.chords[i], y = spec.chords[j];
            bool shares = x.first == y.first || x.first == y.second || x.second == y.first ||
                          x.second == y.second;
            if (shares || chords_cross(spec.cycle_len, x, y)) conflict[i][j] = conflict[j][i] = 1;
        }
    int best = 0;
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int i) {
        if (i == k) {
            best = std::max(best, static_cast<int>(chosen.size()));
            return;
        }
        if (static_cast<int>(chosen.size()) + (k - i) <= best) return;
        bool ok = true;
        for (int c : chosen)
            if (conflict[c][i]) ok = false;
        if (ok) {
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
        }
        rec(i + 1);
    };
    rec(0);
    return best;
}

LabeledGraph strip(const StripSpec& spec) {
    const int len = spec.cycle_len;
    LabeledGraph out{Graph(len), {}};
    for (int i = 0; i < len; ++i) {
        if (spec.delete_ab && i == spec.ab_pos) continue;
        if (spec.delete_cd && i == spec.cd_pos) continue;
        out.graph.add_edge(i, (i + 1) % len);
    }
    for (auto ch : spec.chords) out.graph.add_edge(ch.first, ch.second);
    out.roles["corners"] = VertexSet{spec.a(), spec.b(), spec.c(), spec.d()};
    return out;
}

StripSpec regular_strip_spec(int k) {
    if (k < 2) throw std::invalid_argument("regular_strip_spec: need k >= 2");
    StripSpec spec;
    spec.cycle_len = 2 * k;
    // Cycle positions: v_i = i-1, w_i = 2k-i. ab = v1w1, cd = vkwk; both
    // deleted, leaving only rails and diagonals.
    spec.ab_pos = 2 * k - 1;
    spec.cd_pos = k - 1;
    spec.delete_ab = true;
    spec.delete_cd = true;
    for (int i = 1; i < k; ++i) {
        spec.chords.emplace_back(i - 1, 2 * k - i - 1);  // v_i w_{i+1}
        spec.chords.emplace_back(2 * k - i, i);          // w_i v_{i+1}
    }
    validate_strip_spec(spec);
    return spec;
}

EmbeddedStrip counterexample_strip(int n) {
    if (n < 3) throw std::invalid_argument("counterexample_strip: need n >= 3");
    EmbeddedStrip out;
    StripSpec& spec = out.spec;
    spec.cycle_len = 2 * n;
    // Positions 0..n are r_0..r_n, positions n+1..2n-1 are w_{n-1}..w_1.
    spec.ab_pos = 2 * n - 1;  // a = w_1, b = r_0
    spec.cd_pos = n;          // c = r_n, d = w_{n-1}
    for (int i = 1; i <= n - 2; ++i) spec.chords.emplace_back(2 * n - i, i + 1);  // w_i r_{i+1}
    for (int i = 2; i <= n - 1; ++i) spec.chords.emplace_back(2 * n - i, i - 1);  // w_i r_{i-1}
    validate_strip_spec(spec);
    out.host_vertex.resize(2 * n);
    for (int p = 0; p <= n; ++p) out.host_vertex[p] = p;            // r_p
    for (int p = n + 1; p < 2 * n; ++p) out.host_vertex[p] = 3 * n - p;  // w_{2n-p}
    return out;
}

}  // namespace agile
