#pragma once

#include "heptalab/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace heptalab {

/// Seeded generator whose streams are identical on every platform. The
/// standard distributions are implementation-defined, so the bounded and
/// real-valued draws are done here by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform in [0, 1) with 53 bits of precision.
    double unit();

    bool chance(double p) { return unit() < p; }

    template <class T>
    void shuffle(std::vector<T>& items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// G(n, p) sample.
Graph random_graph(std::size_t n, double p, Rng& rng);

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

/// Uniformly random permutation of 0..n-1.
std::vector<Vertex> random_permutation(std::size_t n, Rng& rng);

} // namespace heptalab
