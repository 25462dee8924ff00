#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "agile/graph.hpp"

namespace agile {

/// Malformed graph6 input; `offset` is the byte where decoding failed.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& msg, size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"), offset(offset) {}

    size_t offset;
};

/// Decode a graph6 string (no ">>graph6<<" header). Supports n <= 258047.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding; parse_graph6(serialize_graph6(g)) == g.
std::string serialize_graph6(const Graph& g);

}  // namespace agile
