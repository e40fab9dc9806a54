#pragma once

#include "heptalab/graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace heptalab {

/// Proper-coloring candidate: color[v] in [0, k) for every vertex.
struct Coloring {
    std::vector<int> color;
    int k = 0;

    /// Number of distinct colors actually used.
    int used_colors() const;
};

/// Throws std::invalid_argument when the coloring does not cover every
/// vertex of g with a color in [0, k).
bool is_proper(const Graph& g, const Coloring& c);

struct ChiResult {
    int chi = 0;
    Coloring coloring;
    std::uint64_t nodes_explored = 0;
};

constexpr std::size_t kChromaticOrderCap = 40;

/// Exact chromatic number. Tries k = omega, omega+1, ... below the DSATUR
/// greedy bound, so the reported chi is certified by the failed (chi-1)
/// search. Throws std::invalid_argument above kChromaticOrderCap vertices.
ChiResult chromatic_number_exact(const Graph& g);

/// A proper coloring with at most k colors, or nullopt if none exists.
/// `nodes` (optional) accumulates search nodes.
std::optional<Coloring> find_k_coloring(const Graph& g, int k, std::uint64_t* nodes = nullptr);

/// DSATUR greedy coloring; an upper bound on chi.
Coloring greedy_dsatur(const Graph& g);

} // namespace heptalab
