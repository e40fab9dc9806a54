#include "heptalab/random.hpp"

#include <numeric>
#include <stdexcept>

namespace heptalab {

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("Rng::below needs a positive bound");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do
        x = engine_();
    while (x >= limit);
    return x % bound;
}

double Rng::unit()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Graph random_graph(std::size_t n, double p, Rng& rng)
{
    GraphBuilder b(n);
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            if (rng.chance(p))
                b.add_edge(i, j);
    return b.build();
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm)
{
    if (perm.size() != g.order())
        throw std::invalid_argument("permutation size does not match the graph order");
    std::vector<bool> seen(perm.size(), false);
    for (Vertex v : perm) {
        if (v >= perm.size() || seen[v])
            throw std::invalid_argument("relabel needs a permutation of 0..n-1");
        seen[v] = true;
    }
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges())
        b.add_edge(perm[u], perm[v]);
    return b.build();
}

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng)
{
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    rng.shuffle(perm);
    return perm;
}

} // namespace heptalab
