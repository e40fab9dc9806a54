#pragma once

#include "heptalab/vertex_set.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace heptalab {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple graph on the dense vertex range [0, n).
///
/// Each vertex owns one adjacency row; for n <= 64 a row is a single machine
/// word. Equality is labeled equality.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n);
    /// Throws std::invalid_argument on loops or out-of-range endpoints.
    /// Duplicate edges are merged.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges);

    std::size_t order() const noexcept { return rows_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const noexcept { return u < order() && rows_[u].contains(v); }
    const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
    std::size_t degree(Vertex v) const { return rows_.at(v).size(); }

    VertexSet vertices() const { return VertexSet::full(order()); }
    VertexSet empty_set() const { return VertexSet(order()); }

    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) noexcept
    {
        return a.rows_ == b.rows_;
    }

private:
    friend class GraphBuilder;

    std::vector<VertexSet> rows_;
    std::size_t edge_count_ = 0;
};

/// Mutable staging area for constructing a Graph edge by edge.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);

    std::size_t order() const noexcept { return rows_.size(); }
    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& remove_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const noexcept { return u < order() && rows_[u].contains(v); }
    /// Makes every vertex of a adjacent to every vertex of b (a, b disjoint).
    GraphBuilder& join(const VertexSet& a, const VertexSet& b);

    Graph build() const;

private:
    std::vector<VertexSet> rows_;
};

/// Subgraph induced by a vertex set, with the map back to parent vertex ids.
/// Child vertex i corresponds to parent vertex to_parent[i]; to_parent is
/// ascending.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);

/// Relation between two disjoint vertex sets. Every flag that holds is set.
struct SetRelation {
    bool complete = false;
    bool anticomplete = false;
    /// Every vertex of each side has a neighbor on the other side.
    bool linked = false;

    enum class Kind { complete, anticomplete, linked, mixed };
    /// Strongest applicable relation, in the order complete, anticomplete,
    /// linked. Two empty sets are reported complete.
    Kind strongest() const noexcept;
};

/// Throws std::invalid_argument if the sets overlap.
SetRelation relation(const Graph& g, const VertexSet& a, const VertexSet& b);

bool is_complete_to(const Graph& g, const VertexSet& a, const VertexSet& b);
bool is_anticomplete_to(const Graph& g, const VertexSet& a, const VertexSet& b);
bool is_linked(const Graph& g, const VertexSet& a, const VertexSet& b);

bool is_stable_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

/// Vertices of `within` with at least one neighbor in `targets`.
VertexSet neighborhood_of(const Graph& g, const VertexSet& targets, const VertexSet& within);

/// Connected components of g[within], ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
/// Component of g[within] containing `from`.
VertexSet component_of(const Graph& g, const VertexSet& within, Vertex from);
bool is_connected(const Graph& g);

/// Standard small graphs used as patterns and test fixtures.
namespace named {

Graph empty(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
/// Chordless cycle 0-1-...-(n-1)-0, n >= 3.
Graph cycle(std::size_t n);
/// K4 on {0,1,2,3} plus vertex 4 adjacent to 0 and 1.
Graph full_house();
/// Odd antihole on seven vertices: i ~ j iff cyclic distance is 1 or 2.
Graph c7_complement();
/// Circulant on Z_11 with i ~ j iff cyclic distance is 3, 4 or 5.
Graph t11_circulant();
Graph petersen();

} // namespace named

} // namespace heptalab
