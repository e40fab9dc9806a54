#pragma once

#include "heptalab/graph.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace heptalab {

/// Largest order accepted by canonical_form and enumerate_graphs.
constexpr std::size_t kCanonicalOrderCap = 11;

/// Isomorphism-invariant relabeling of g: two graphs are isomorphic iff their
/// canonical forms are equal. Vertices are first split by iterated degree
/// refinement, then every ordering inside the classes is tried.
/// Throws std::invalid_argument above kCanonicalOrderCap.
Graph canonical_form(const Graph& g);

/// One canonical representative of every isomorphism class of graphs on n
/// vertices, sorted by graph6 encoding.
std::vector<Graph> enumerate_graphs(std::size_t n);

} // namespace heptalab
