#include "heptalab/enumeration.hpp"

#include "heptalab/graph6.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace heptalab {

namespace {

// Color classes after refinement, in an isomorphism-invariant order.
std::vector<std::vector<Vertex>> refined_classes(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<std::size_t> color(n, 0);
    for (std::size_t classes = 1;;) {
        std::vector<std::pair<std::vector<std::size_t>, Vertex>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            std::vector<std::size_t> s{color[v]};
            std::vector<std::size_t> around;
            for (Vertex u : g.neighbors(v))
                around.push_back(color[u]);
            std::ranges::sort(around);
            s.insert(s.end(), around.begin(), around.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<std::size_t>, std::size_t> index;
        for (const auto& [s, v] : sig)
            index.emplace(s, 0);
        std::size_t next = 0;
        for (auto& [s, id] : index)
            id = next++;
        for (Vertex v = 0; v < n; ++v)
            color[v] = index[sig[v].first];
        if (index.size() == classes)
            break;
        classes = index.size();
    }
    std::size_t count = n == 0 ? 0 : *std::ranges::max_element(color) + 1;
    std::vector<std::vector<Vertex>> out(count);
    for (Vertex v = 0; v < n; ++v)
        out[color[v]].push_back(v);
    return out;
}

std::uint64_t code_of(const Graph& g, const std::vector<Vertex>& order)
{
    std::uint64_t code = 0;
    const std::size_t n = order.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
    return code;
}

} // namespace

Graph canonical_form(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > kCanonicalOrderCap)
        throw std::invalid_argument("canonical_form is limited to " + std::to_string(kCanonicalOrderCap) +
                                    " vertices");
    auto classes = refined_classes(g);
    for (auto& c : classes)
        std::ranges::sort(c);

    std::uint64_t best_code = 0;
    std::vector<Vertex> best;
    std::vector<Vertex> order;
    // Odometer over the permutations of every class.
    for (bool more = true; more;) {
        order.clear();
        for (const auto& c : classes)
            order.insert(order.end(), c.begin(), c.end());
        std::uint64_t code = code_of(g, order);
        if (best.empty() || code > best_code) {
            best_code = code;
            best = order;
        }
        more = false;
        for (auto& c : classes) {
            if (std::ranges::next_permutation(c).found) {
                more = true;
                break;
            }
        }
    }
    std::vector<Vertex> perm(n);
    for (std::size_t pos = 0; pos < n; ++pos)
        perm[best[pos]] = pos;
    GraphBuilder b(n);
    for (auto [u, v] : g.edges())
        b.add_edge(perm[u], perm[v]);
    return b.build();
}

std::vector<Graph> enumerate_graphs(std::size_t n)
{
    if (n > kCanonicalOrderCap)
        throw std::invalid_argument("enumerate_graphs is limited to " + std::to_string(kCanonicalOrderCap) +
                                    " vertices");
    std::vector<Graph> level{Graph(0)};
    for (std::size_t order = 1; order <= n; ++order) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const auto& base : level) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (order - 1)); ++mask) {
                GraphBuilder b(order);
                for (auto [u, v] : base.edges())
                    b.add_edge(u, v);
                for (Vertex u = 0; u + 1 < order; ++u)
                    if ((mask >> u) & 1U)
                        b.add_edge(u, order - 1);
                Graph c = canonical_form(b.build());
                if (seen.insert(to_graph6(c)).second)
                    next.push_back(std::move(c));
            }
        }
        level = std::move(next);
    }
    std::ranges::sort(level, [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
    return level;
}

} // namespace heptalab
