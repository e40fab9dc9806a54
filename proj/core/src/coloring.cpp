#include "heptalab/coloring.hpp"

#include "heptalab/detectors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace heptalab {

int Coloring::used_colors() const
{
    return static_cast<int>(std::set<int>(color.begin(), color.end()).size());
}

bool is_proper(const Graph& g, const Coloring& c)
{
    if (c.color.size() != g.order())
        throw std::invalid_argument("coloring covers " + std::to_string(c.color.size()) + " vertices, graph has " +
                                    std::to_string(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        if (c.color[v] < 0 || c.color[v] >= c.k)
            throw std::invalid_argument("vertex " + std::to_string(v) + " is uncolored or out of palette");
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v])
            return false;
    return true;
}

namespace {

class KColoringSearch {
public:
    KColoringSearch(const Graph& g, int k) : g_(g), k_(k), n_(g.order())
    {
        color_.assign(n_, -1);
        blocked_.assign(n_ * static_cast<std::size_t>(k), 0);
        saturation_.assign(n_, 0);
    }

    std::optional<Coloring> run(const VertexSet& clique, std::uint64_t& nodes)
    {
        if (k_ <= 0)
            return n_ == 0 ? std::optional<Coloring>(Coloring{{}, std::max(k_, 0)}) : std::nullopt;
        if (clique.size() > static_cast<std::size_t>(k_))
            return std::nullopt;
        // A clique takes distinct colors in any proper coloring; fixing them
        // removes palette symmetry.
        int next = 0;
        for (Vertex v : clique)
            assign(v, next++);
        used_ = next;
        colored_ = clique.size();
        if (!search(nodes))
            return std::nullopt;
        return Coloring{color_, k_};
    }

private:
    int& blocked(Vertex v, int c) { return blocked_[v * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)]; }

    void assign(Vertex v, int c)
    {
        color_[v] = c;
        for (Vertex w : g_.neighbors(v))
            if (blocked(w, c)++ == 0)
                ++saturation_[w];
    }

    void unassign(Vertex v)
    {
        int c = color_[v];
        color_[v] = -1;
        for (Vertex w : g_.neighbors(v))
            if (--blocked(w, c) == 0)
                --saturation_[w];
    }

    bool search(std::uint64_t& nodes)
    {
        if (colored_ == n_)
            return true;
        ++nodes;
        Vertex pick = n_;
        for (Vertex v = 0; v < n_; ++v) {
            if (color_[v] >= 0)
                continue;
            if (pick == n_ || saturation_[v] > saturation_[pick] ||
                (saturation_[v] == saturation_[pick] && g_.degree(v) > g_.degree(pick)))
                pick = v;
        }
        if (saturation_[pick] >= k_)
            return false;
        const int limit = std::min(k_, used_ + 1);
        for (int c = 0; c < limit; ++c) {
            if (blocked(pick, c) != 0)
                continue;
            const int saved_used = used_;
            used_ = std::max(used_, c + 1);
            assign(pick, c);
            ++colored_;
            if (search(nodes))
                return true;
            --colored_;
            unassign(pick);
            used_ = saved_used;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::size_t n_;
    std::vector<int> color_;
    std::vector<int> blocked_;
    std::vector<int> saturation_;
    int used_ = 0;
    std::size_t colored_ = 0;
};

} // namespace

std::optional<Coloring> find_k_coloring(const Graph& g, int k, std::uint64_t* nodes)
{
    std::uint64_t local = 0;
    auto clique = clique_number(g).witness;
    auto result = KColoringSearch(g, k).run(clique, local);
    if (nodes)
        *nodes += local;
    return result;
}

Coloring greedy_dsatur(const Graph& g)
{
    const std::size_t n = g.order();
    Coloring out{std::vector<int>(n, -1), 0};
    std::vector<std::set<int>> seen(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex pick = n;
        for (Vertex v = 0; v < n; ++v) {
            if (out.color[v] >= 0)
                continue;
            if (pick == n || seen[v].size() > seen[pick].size() ||
                (seen[v].size() == seen[pick].size() && g.degree(v) > g.degree(pick)))
                pick = v;
        }
        int c = 0;
        while (seen[pick].contains(c))
            ++c;
        out.color[pick] = c;
        out.k = std::max(out.k, c + 1);
        for (Vertex w : g.neighbors(pick))
            seen[w].insert(c);
    }
    return out;
}

ChiResult chromatic_number_exact(const Graph& g)
{
    if (g.order() > kChromaticOrderCap)
        throw std::invalid_argument("exact chromatic number is limited to " + std::to_string(kChromaticOrderCap) +
                                    " vertices");
    ChiResult result;
    if (g.order() == 0)
        return result;
    Coloring upper = greedy_dsatur(g);
    auto clique = clique_number(g);
    for (int k = static_cast<int>(clique.omega); k < upper.k; ++k) {
        if (auto c = KColoringSearch(g, k).run(clique.witness, result.nodes_explored)) {
            result.chi = k;
            result.coloring = std::move(*c);
            return result;
        }
    }
    result.chi = upper.k;
    result.coloring = std::move(upper);
    return result;
}

} // namespace heptalab
