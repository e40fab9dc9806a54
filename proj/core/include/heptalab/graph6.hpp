#pragma once

#include "heptalab/graph.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace heptalab {

/// Malformed graph6 input. offset() is the byte index (into the line as
/// given, header included) where decoding failed.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Decodes one graph6 line. An optional ">>graph6<<" header and a trailing
/// "\n" or "\r\n" are accepted. Padding bits in the final byte must be zero,
/// so every accepted string is the canonical encoding of its graph.
Graph from_graph6(std::string_view line);

/// Canonical graph6 encoding, without header or newline.
std::string to_graph6(const Graph& g);

/// A graph together with the exact text it was read from.
struct Graph6Record {
    std::string text;
    Graph graph;

    static Graph6Record parse(std::string_view line);
    static Graph6Record of(Graph g);
};

} // namespace heptalab
