#include "agile/graph6.hpp"

namespace agile {

namespace {

constexpr int kBias = 63;
constexpr int kMaxShort = 62;
constexpr long kMaxLong = 258047;  // three 6-bit digits

int data_byte(std::string_view text, size_t pos) {
    if (pos >= text.size()) throw Graph6Error("graph6 string truncated", text.size());
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126) throw Graph6Error("invalid graph6 byte", pos);
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw Graph6Error("empty graph6 string", 0);
    size_t pos = 0;
    long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw Graph6Error("graph6 sizes above 258047 are not supported", 0);
        n = 0;
        for (pos = 1; pos <= 3; ++pos) n = n * 64 + data_byte(text, pos);
        if (n > kMaxLong) throw Graph6Error("graph6 size field out of range", 0);
    } else {
        n = data_byte(text, 0);
        pos = 1;
    }

    Graph g(static_cast<int>(n));
    long bits = n * (n - 1) / 2;
    long bytes = (bits + 5) / 6;
    int buffer = 0;
    int available = 0;
    size_t byte_pos = pos;
    long consumed_bytes = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (available == 0) {
                byte_pos = pos + consumed_bytes;
                buffer = data_byte(text, byte_pos);
                ++consumed_bytes;
                available = 6;
            }
            --available;
            if ((buffer >> available) & 1) g.add_edge(row, col);
        }
    }
    if (available > 0 && (buffer & ((1 << available) - 1)) != 0)
        throw Graph6Error("nonzero graph6 padding bits", byte_pos);
    if (pos + static_cast<size_t>(bytes) != text.size())
        throw Graph6Error("trailing bytes after graph6 data", pos + bytes);
    return g;
}

std::string serialize_graph6(const Graph& g) {
    const long n = g.vertex_count();
    if (n > kMaxLong)
        throw std::invalid_argument("serialize_graph6: more than 258047 vertices");
    std::string out;
    if (n <= kMaxShort) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>((n >> 12 & 63) + kBias));
        out.push_back(static_cast<char>((n >> 6 & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int buffer = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            buffer = buffer << 1 | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(buffer + kBias));
                buffer = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((buffer << (6 - filled)) + kBias));
    return out;
}

}  // namespace agile
