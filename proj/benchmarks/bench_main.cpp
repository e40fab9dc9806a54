#include "heptalab/coloring.hpp"
#include "heptalab/decomposition.hpp"
#include "heptalab/detectors.hpp"
#include "heptalab/enumeration.hpp"
#include "heptalab/graph6.hpp"
#include "heptalab/random.hpp"
#include "heptalab/structures.hpp"

#include <benchmark/benchmark.h>

using namespace heptalab;

namespace {

std::vector<Graph> sample(std::size_t n, double p, std::size_t count, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_graph(n, p, rng));
    return out;
}

// Sparse random graphs keep odd holes long or absent, which is the slow case.
void BM_OddHole(benchmark::State& state)
{
    auto graphs = sample(static_cast<std::size_t>(state.range(0)), 0.15, 64, 1);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(find_odd_hole(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_OddHole)->Arg(10)->Arg(16)->Arg(24)->Arg(32);

void BM_OddHoleFreeBlowUp(benchmark::State& state)
{
    auto gen = generate_heptagram_type({3, 3, 3, 3, 3, 3, 3}, {2, 0, 0, 2, 0, 0, 0});
    for (auto _ : state)
        benchmark::DoNotOptimize(find_odd_hole(gen.graph));
}
BENCHMARK(BM_OddHoleFreeBlowUp);

void BM_FullHouse(benchmark::State& state)
{
    auto graphs = sample(static_cast<std::size_t>(state.range(0)), 0.5, 64, 2);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(find_full_house(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_FullHouse)->Arg(12)->Arg(24)->Arg(48);

void BM_CliqueNumber(benchmark::State& state)
{
    auto graphs = sample(static_cast<std::size_t>(state.range(0)), 0.5, 64, 3);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(clique_number(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CliqueNumber)->Arg(16)->Arg(32)->Arg(64);

void BM_ChromaticNumber(benchmark::State& state)
{
    auto graphs = sample(static_cast<std::size_t>(state.range(0)), 0.5, 32, 4);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(chromatic_number_exact(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_ChromaticNumber)->Arg(10)->Arg(16)->Arg(24);

void BM_HarmoniousCutset(benchmark::State& state)
{
    auto graphs = sample(static_cast<std::size_t>(state.range(0)), 0.3, 64, 5);
    std::erase_if(graphs, [](const Graph& g) { return !is_connected(g); });
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(find_harmonious_cutset(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_HarmoniousCutset)->Arg(8)->Arg(12)->Arg(16);

void BM_RecognizeHeptagramType(benchmark::State& state)
{
    Rng rng(6);
    auto gen = generate_heptagram_type({2, 3, 1, 2, 2, 1, 3}, {1, 0, 0, 1, 0, 0, 0});
    Graph g = relabel(gen.graph, random_permutation(gen.graph.order(), rng));
    for (auto _ : state)
        benchmark::DoNotOptimize(recognize_heptagram_type(g));
}
BENCHMARK(BM_RecognizeHeptagramType);

void BM_RecognizeT11(benchmark::State& state)
{
    Rng rng(7);
    auto gen = generate_t11_type({2, 1, 3, 1, 2, 1, 1, 2, 3, 1, 2});
    Graph g = relabel(gen.graph, random_permutation(gen.graph.order(), rng));
    for (auto _ : state)
        benchmark::DoNotOptimize(recognize_t11_type(g));
}
BENCHMARK(BM_RecognizeT11);

void BM_Graph6RoundTrip(benchmark::State& state)
{
    auto graphs = sample(static_cast<std::size_t>(state.range(0)), 0.5, 64, 8);
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(from_graph6(to_graph6(graphs[i++ % graphs.size()])));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(10)->Arg(64)->Arg(200);

void BM_EnumerateGraphs(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_graphs(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateGraphs)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

} // namespace
