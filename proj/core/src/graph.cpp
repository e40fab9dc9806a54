#include "heptalab/graph.hpp"

#include <stdexcept>
#include <string>

namespace heptalab {

Graph::Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    *this = b.build();
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
{
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : rows_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : rows_(n, VertexSet(n)) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v)
{
    if (u >= order() || v >= order())
        throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                    " outside vertex range " + std::to_string(order()));
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    rows_[u].insert(v);
    rows_[v].insert(u);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v)
{
    if (u < order() && v < order()) {
        rows_[u].erase(v);
        rows_[v].erase(u);
    }
    return *this;
}

GraphBuilder& GraphBuilder::join(const VertexSet& a, const VertexSet& b)
{
    for (Vertex u : a)
        for (Vertex v : b)
            add_edge(u, v);
    return *this;
}

Graph GraphBuilder::build() const
{
    Graph g;
    g.rows_ = rows_;
    std::size_t degree_sum = 0;
    for (const auto& r : rows_)
        degree_sum += r.size();
    g.edge_count_ = degree_sum / 2;
    return g;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.order())
        throw std::invalid_argument("vertex set universe does not match graph order");
    InducedSubgraph out;
    out.to_parent = s.to_vector();
    std::vector<std::size_t> to_child(g.order(), 0);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        to_child[out.to_parent[i]] = i;
    GraphBuilder b(out.to_parent.size());
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        for (Vertex w : g.neighbors(out.to_parent[i]) & s)
            if (to_child[w] > i)
                b.add_edge(i, to_child[w]);
    out.graph = b.build();
    return out;
}

Graph complement(const Graph& g)
{
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                b.add_edge(u, v);
    return b.build();
}

SetRelation::Kind SetRelation::strongest() const noexcept
{
    if (complete)
        return Kind::complete;
    if (anticomplete)
        return Kind::anticomplete;
    if (linked)
        return Kind::linked;
    return Kind::mixed;
}

bool is_complete_to(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    for (Vertex u : a)
        if (!b.is_subset_of(g.neighbors(u)))
            return false;
    return true;
}

bool is_anticomplete_to(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    for (Vertex u : a)
        if (g.neighbors(u).intersects(b))
            return false;
    return true;
}

bool is_linked(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    for (Vertex u : a)
        if (!g.neighbors(u).intersects(b))
            return false;
    for (Vertex v : b)
        if (!g.neighbors(v).intersects(a))
            return false;
    return true;
}

SetRelation relation(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    if (a.intersects(b))
        throw std::invalid_argument("relation() requires disjoint vertex sets");
    SetRelation r;
    r.complete = is_complete_to(g, a, b);
    r.anticomplete = is_anticomplete_to(g, a, b);
    r.linked = is_linked(g, a, b);
    return r;
}

bool is_stable_set(const Graph& g, const VertexSet& s)
{
    for (Vertex v : s)
        if (g.neighbors(v).intersects(s))
            return false;
    return true;
}

bool is_clique(const Graph& g, const VertexSet& s)
{
    for (Vertex v : s) {
        VertexSet others = s;
        others.erase(v);
        if (!others.is_subset_of(g.neighbors(v)))
            return false;
    }
    return true;
}

VertexSet neighborhood_of(const Graph& g, const VertexSet& targets, const VertexSet& within)
{
    VertexSet out(g.order());
    for (Vertex t : targets)
        out |= g.neighbors(t);
    return out & within;
}

VertexSet component_of(const Graph& g, const VertexSet& within, Vertex from)
{
    VertexSet seen(g.order());
    seen.insert(from);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet grown(g.order());
        for (Vertex v : frontier)
            grown |= g.neighbors(v);
        grown &= within;
        grown -= seen;
        seen |= grown;
        frontier = std::move(grown);
    }
    return seen;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within)
{
    std::vector<VertexSet> out;
    VertexSet rest = within;
    while (auto v = rest.first()) {
        out.push_back(component_of(g, rest, *v));
        rest -= out.back();
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return g.order() == 0 || components(g, g.vertices()).size() == 1;
}

namespace named {

Graph empty(std::size_t n)
{
    return Graph(n);
}

Graph complete(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return b.build();
}

Graph path(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return b.build();
}

Graph cycle(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph full_house()
{
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}});
}

namespace {

Graph circulant(std::size_t n, std::initializer_list<std::size_t> distances)
{
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t d : distances)
            b.add_edge(v, (v + d) % n);
    return b.build();
}

} // namespace

Graph c7_complement()
{
    return circulant(7, {1, 2});
}

Graph t11_circulant()
{
    return circulant(11, {3, 4, 5});
}

Graph petersen()
{
    GraphBuilder b(10);
    for (Vertex i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return b.build();
}

} // namespace named

} // namespace heptalab
