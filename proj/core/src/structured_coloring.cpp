#include "heptalab/structured_coloring.hpp"

#include "heptalab/detectors.hpp"

#include <functional>

namespace heptalab {

Coloring four_color_t11(const Graph& g, const T11Witness& w)
{
    if (auto report = verify_t11_type(g, w); !report)
        throw std::invalid_argument("T11 witness does not verify: " + report.detail);
    static constexpr std::array<int, 11> run{0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3};
    Coloring c{std::vector<int>(g.order(), -1), 4};
    for (std::size_t i = 0; i < 11; ++i)
        for (Vertex v : w.w[i])
            c.color[v] = run[i];
    return c;
}

StructuredColoring four_color_heptagram_type(const Graph& g, const HeptagramTypeWitness& w)
{
    if (auto report = verify_heptagram_type(g, w); !report)
        throw std::invalid_argument("heptagram-type witness does not verify: " + report.detail);
    static constexpr std::array<int, 7> klass{0, 1, 2, 0, 1, 2, 3};
    StructuredColoring out;
    out.omega = clique_number(g).omega;
    out.coloring = Coloring{std::vector<int>(g.order(), -1), 4};
    auto& color = out.coloring.color;
    for (std::size_t i = 0; i < 7; ++i)
        for (Vertex v : w.w[i])
            color[v] = klass[i];

    std::vector<Vertex> ys;
    for (const auto& part : w.y)
        for (Vertex v : part)
            ys.push_back(v);
    std::function<bool(std::size_t)> place = [&](std::size_t k) {
        if (k == ys.size())
            return true;
        const Vertex y = ys[k];
        for (int c = 0; c < 4; ++c) {
            bool free = true;
            for (Vertex u : g.neighbors(y))
                if (color[u] == c) {
                    free = false;
                    break;
                }
            if (!free)
                continue;
            color[y] = c;
            if (place(k + 1))
                return true;
            color[y] = -1;
        }
        return false;
    };
    if (!place(0)) {
        auto exact = find_k_coloring(g, 4);
        if (!exact)
            throw std::runtime_error("graph has no 4-coloring; witness and graph disagree");
        out.coloring = std::move(*exact);
        out.used_fallback = true;
    }
    return out;
}

} // namespace heptalab
