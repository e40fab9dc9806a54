#include "heptalab/decomposition.hpp"
#include "heptalab/graph6.hpp"
#include "heptalab/random.hpp"

#include "oracles.hpp"
#include "planted.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace heptalab;

namespace {

// Brute-force reading of the definition: stable parts, pairwise complete when
// there are at least three, and every induced path between cutset vertices
// with interior outside the cutset has the parity its parts demand.
bool oracle_harmonious(const Graph& g, const std::vector<VertexSet>& parts, const VertexSet& cutset)
{
    std::vector<int> part_of(g.order(), -1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!is_stable_set(g, parts[i]))
            return false;
        for (Vertex v : parts[i])
            part_of[v] = static_cast<int>(i);
    }
    if (parts.size() >= 3)
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                if (!is_complete_to(g, parts[i], parts[j]))
                    return false;
    const std::uint64_t outside = cutset.complement().mask();
    auto xs = cutset.to_vector();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            unsigned seen = oracle::path_parities(g, xs[i], xs[j], outside);
            unsigned allowed = part_of[xs[i]] == part_of[xs[j]] ? 1U : 2U;
            if ((seen & ~allowed) != 0)
                return false;
        }
    return true;
}

// Sides: the components of G - X dealt into two groups by `split`.
std::optional<HarmoniousPartition> make_partition(const Graph& g, const VertexSet& cutset,
                                                  const std::vector<int>& assignment, std::size_t k, std::uint64_t split)
{
    HarmoniousPartition p;
    p.cutset = cutset;
    p.parts.assign(k, VertexSet(g.order()));
    std::size_t i = 0;
    for (Vertex x : cutset)
        p.parts[static_cast<std::size_t>(assignment[i++])].insert(x);
    auto comps = components(g, cutset.complement());
    if (comps.size() < 2)
        return std::nullopt;
    p.sides = {VertexSet(g.order()), VertexSet(g.order())};
    for (std::size_t c = 0; c < comps.size(); ++c)
        p.sides[c == 0 ? 0 : ((split >> c) & 1U)] |= comps[c];
    if (p.sides[1].empty())
        p.sides[1] = comps[1], p.sides[0] = cutset.complement() - comps[1];
    return p;
}

// Every set partition of the cutset into nonempty parts, as restricted growth strings.
void for_each_set_partition(std::size_t m, const std::function<void(const std::vector<int>&, std::size_t)>& f)
{
    std::vector<int> a(m, 0);
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int max) {
        if (i == m) {
            f(a, static_cast<std::size_t>(max + 1));
            return;
        }
        for (int c = 0; c <= max + 1; ++c) {
            a[i] = c;
            go(i + 1, std::max(max, c));
        }
    };
    if (m > 0) {
        a[0] = 0;
        go(1, 0);
    }
}

bool oracle_has_harmonious_cutset(const Graph& g)
{
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask) {
        VertexSet x = VertexSet::from_mask(g.order(), mask);
        if (components(g, x.complement()).size() < 2)
            continue;
        bool found = false;
        for_each_set_partition(x.size(), [&](const std::vector<int>& a, std::size_t k) {
            if (found)
                return;
            std::vector<VertexSet> parts(k, VertexSet(g.order()));
            std::size_t i = 0;
            for (Vertex v : x)
                parts[static_cast<std::size_t>(a[i++])].insert(v);
            found = oracle_harmonious(g, parts, x);
        });
        if (found)
            return true;
    }
    return false;
}

bool proper(const Graph& g, const Coloring& c, int k)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (c.color[v] < 0 || c.color[v] >= k)
            return false;
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v])
            return false;
    return true;
}

Coloring permuted(const Coloring& c, Rng& rng)
{
    std::vector<int> perm(static_cast<std::size_t>(c.k));
    for (int i = 0; i < c.k; ++i)
        perm[static_cast<std::size_t>(i)] = i;
    rng.shuffle(perm);
    Coloring out = c;
    for (auto& col : out.color)
        col = perm[static_cast<std::size_t>(col)];
    return out;
}

bool strictly_increasing(const std::vector<std::size_t>& xs)
{
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] <= xs[i - 1])
            return false;
    return true;
}

} // namespace

TEST(VerifyHarmonious, CutVertexIsTrivial)
{
    // Two triangles sharing vertex 2.
    Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    HarmoniousPartition p{VertexSet(5, {2}), {VertexSet(5, {2})}, {VertexSet(5, {0, 1}), VertexSet(5, {3, 4})}};
    EXPECT_EQ(verify_harmonious(g, p).verdict, Verdict::yes);
}

TEST(VerifyHarmonious, AdjacentVerticesInOnePart)
{
    Graph p4 = named::path(4);
    HarmoniousPartition p{VertexSet(4, {1, 2}), {VertexSet(4, {1, 2})}, {VertexSet(4, {0}), VertexSet(4, {3})}};
    auto r = verify_harmonious(p4, p);
    EXPECT_EQ(r.verdict, Verdict::no);
    EXPECT_EQ(r.counterexample, (std::vector<Vertex>{1, 2}));
}

TEST(VerifyHarmonious, GluedHexagons)
{
    auto inst = planted::glued_hexagons();
    EXPECT_EQ(verify_harmonious(inst.graph, inst.partition).verdict, Verdict::yes);
    EXPECT_TRUE(oracle_harmonious(inst.graph, inst.partition.parts, inst.partition.cutset));
    // One part makes the odd a-b paths violations.
    auto one = inst.partition;
    one.parts = {one.cutset};
    auto r = verify_harmonious(inst.graph, one);
    EXPECT_EQ(r.verdict, Verdict::no);
    EXPECT_EQ(r.counterexample.size(), 4U);
}

TEST(VerifyHarmonious, MalformedPartitions)
{
    auto inst = planted::glued_hexagons();
    auto p = inst.partition;
    p.parts.push_back(VertexSet(10));
    EXPECT_THROW(verify_harmonious(inst.graph, p), MalformedPartition);
    p = inst.partition;
    p.parts[1].insert(0);
    EXPECT_THROW(verify_harmonious(inst.graph, p), MalformedPartition);
    p = inst.partition;
    p.sides[0].insert(6);
    p.sides[1].erase(6);
    EXPECT_THROW(verify_harmonious(inst.graph, p), MalformedPartition);
    p = inst.partition;
    p.sides[1] = VertexSet(10);
    EXPECT_THROW(verify_harmonious(inst.graph, p), MalformedPartition);
}

TEST(VerifyHarmonious, ThreePartsMustBeComplete)
{
    // Triangle 0,1,2 as the cutset with a pendant side on each of 0 and 1.
    Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
    HarmoniousPartition p{VertexSet(5, {0, 1, 2}),
                          {VertexSet(5, {0}), VertexSet(5, {1}), VertexSet(5, {2})},
                          {VertexSet(5, {3}), VertexSet(5, {4})}};
    EXPECT_EQ(verify_harmonious(g, p).verdict, Verdict::yes);
    Graph h(5, {{0, 1}, {1, 2}, {0, 3}, {1, 4}});
    EXPECT_EQ(verify_harmonious(h, p).verdict, Verdict::no);
}

TEST(VerifyHarmonious, TinyBudgetIsInconclusive)
{
    auto inst = planted::glued_hexagons();
    EXPECT_EQ(verify_harmonious(inst.graph, inst.partition, {.budget = 1}).verdict, Verdict::inconclusive);
}

TEST(VerifyHarmonious, LiteralPathsMayCrossOtherParts)
{
    // Parts {0}, {1}, {2} pairwise complete. Side 0 has the path 0-3-4-1 of
    // length 3 (odd, fine) and 2-5 pendant; side 1 has a pendant on 0.
    // Through part {2} the literal reading also sees 0-2-... paths.
    Graph g(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {4, 1}, {2, 5}, {0, 6}});
    HarmoniousPartition p{VertexSet(7, {0, 1, 2}),
                          {VertexSet(7, {0}), VertexSet(7, {1}), VertexSet(7, {2})},
                          {VertexSet(7, {3, 4, 5}), VertexSet(7, {6})}};
    EXPECT_EQ(verify_harmonious(g, p).verdict, Verdict::yes);
    auto literal = verify_harmonious(g, p, {.interior = PathInterior::avoid_endpoint_parts});
    EXPECT_NE(literal.verdict, Verdict::inconclusive);
}

TEST(VerifyHarmonious, AgreesWithBruteForceOnRandomPartitions)
{
    Rng rng(31);
    int checked = 0;
    int yes = 0;
    while (checked < 1500) {
        std::size_t n = 4 + rng.below(7);
        Graph g = random_graph(n, 0.35 + 0.3 * rng.unit(), rng);
        VertexSet x(n);
        for (Vertex v = 0; v < n; ++v)
            if (rng.chance(0.3))
                x.insert(v);
        if (x.empty())
            continue;
        std::size_t k = 1 + rng.below(std::min<std::size_t>(3, x.size()));
        std::vector<int> a(x.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] = static_cast<int>(i < k ? i : rng.below(k));
        auto p = make_partition(g, x, a, k, rng.next());
        if (!p)
            continue;
        ++checked;
        bool expected = oracle_harmonious(g, p->parts, x);
        auto r = verify_harmonious(g, *p);
        ASSERT_NE(r.verdict, Verdict::inconclusive);
        ASSERT_EQ(r.verdict == Verdict::yes, expected) << to_graph6(g);
        yes += expected;
    }
    EXPECT_GT(yes, 50);
}

TEST(FindHarmoniousCutset, Examples)
{
    EXPECT_EQ(find_harmonious_cutset(named::complete(5)).status, SearchStatus::absent);
    auto p3 = find_harmonious_cutset(named::path(3));
    ASSERT_EQ(p3.status, SearchStatus::found);
    EXPECT_EQ(p3.partition->cutset, VertexSet(3, {1}));
    Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto r = find_harmonious_cutset(bowtie);
    ASSERT_EQ(r.status, SearchStatus::found);
    EXPECT_EQ(r.partition->cutset, VertexSet(5, {2}));
    EXPECT_EQ(r.partition->parts.size(), 1U);
    EXPECT_THROW(find_harmonious_cutset(named::empty(3)), std::invalid_argument);
    EXPECT_EQ(find_harmonious_cutset(named::c7_complement()).status, SearchStatus::absent);
    EXPECT_EQ(find_harmonious_cutset(named::t11_circulant()).status, SearchStatus::absent);
}

TEST(FindHarmoniousCutset, MatchesBruteForceExistence)
{
    Rng rng(77);
    int checked = 0;
    while (checked < 150) {
        Graph g = random_graph(4 + rng.below(4), 0.5, rng);
        if (!is_connected(g))
            continue;
        ++checked;
        auto r = find_harmonious_cutset(g);
        ASSERT_NE(r.status, SearchStatus::inconclusive);
        ASSERT_EQ(r.status == SearchStatus::found, oracle_has_harmonious_cutset(g)) << to_graph6(g);
        if (r.partition)
            EXPECT_TRUE(oracle_harmonious(g, r.partition->parts, r.partition->cutset));
    }
}

TEST(FindHarmoniousCutset, ReturnedPartitionsVerify)
{
    Rng rng(78);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_graph(8 + rng.below(10), 0.3, rng);
        if (!is_connected(g))
            continue;
        auto r = find_harmonious_cutset(g);
        if (r.partition)
            EXPECT_EQ(verify_harmonious(g, *r.partition).verdict, Verdict::yes);
    }
}

TEST(FindHarmoniousCutset, TinyBudgetIsInconclusive)
{
    Rng rng(16);
    Graph g = random_graph(16, 0.5, rng);
    ASSERT_TRUE(is_connected(g));
    auto r = find_harmonious_cutset(g, {.budget = 5});
    EXPECT_EQ(r.status, SearchStatus::inconclusive);
}

TEST(MinimalSeparators, MatchFullComponentCharacterisation)
{
    Rng rng(41);
    for (int i = 0; i < 80; ++i) {
        Graph g = random_graph(3 + rng.below(7), 0.4, rng);
        if (!is_connected(g))
            continue;
        std::vector<VertexSet> expected;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
            VertexSet s = VertexSet::from_mask(g.order(), mask);
            std::size_t full = 0;
            for (const auto& c : components(g, s.complement())) {
                bool is_full = true;
                for (Vertex v : s)
                    is_full = is_full && (g.neighbors(v) & c).size() > 0;
                full += is_full;
            }
            if (full >= 2)
                expected.push_back(s);
        }
        std::sort(expected.begin(), expected.end());
        EXPECT_EQ(minimal_separators(g), expected) << to_graph6(g);
    }
    EXPECT_EQ(minimal_separators(named::cycle(6)).size(), 9U);
}

TEST(Merge, AlreadyCompliantIsUnchanged)
{
    auto inst = planted::glued_hexagons();
    auto s0 = side_graph(inst.graph, inst.partition, 0);
    auto s1 = side_graph(inst.graph, inst.partition, 1);
    // a=0 gets color 0, b=1 color 1, sides alternate.
    auto color_side = [](const InducedSubgraph& s) {
        auto c = find_k_coloring(s.graph, 2);
        Coloring out = *c;
        Vertex a = 0;
        while (s.to_parent[a] != 0)
            ++a;
        if (out.color[a] != 0)
            for (auto& x : out.color)
                x = 1 - x;
        return out;
    };
    MergeTrace trace;
    auto c0 = color_side(s0);
    auto c1 = color_side(s1);
    auto merged = merge_colorings(inst.graph, inst.partition, c0, c1, &trace);
    EXPECT_EQ(trace.swaps, 0U);
    for (Vertex v = 0; v < s0.graph.order(); ++v)
        EXPECT_EQ(merged.color[s0.to_parent[v]], c0.color[v]);
    EXPECT_TRUE(proper(inst.graph, merged, 2));
}

TEST(Merge, SwappedSideIsRepaired)
{
    auto inst = planted::glued_hexagons();
    auto s0 = side_graph(inst.graph, inst.partition, 0);
    auto s1 = side_graph(inst.graph, inst.partition, 1);
    auto c0 = *find_k_coloring(s0.graph, 2);
    auto c1 = *find_k_coloring(s1.graph, 2);
    for (auto& x : c1.color)
        x = 1 - x;
    MergeTrace trace;
    auto merged = merge_colorings(inst.graph, inst.partition, c0, c1, &trace);
    EXPECT_TRUE(proper(inst.graph, merged, 2));
    EXPECT_EQ(merged.color[0], 0);
    EXPECT_EQ(merged.color[1], 1);
    for (const auto& counts : trace.compliant_counts) {
        EXPECT_TRUE(strictly_increasing(counts));
        EXPECT_EQ(counts.back(), 2U);
    }
}

TEST(Merge, PlantedInstances)
{
    Rng rng(2025);
    for (int i = 0; i < 100; ++i) {
        auto inst = planted::make_instance(rng);
        const auto& p = inst.partition;
        auto s0 = side_graph(inst.graph, p, 0);
        auto s1 = side_graph(inst.graph, p, 1);
        int k = std::max({static_cast<int>(p.parts.size()), chromatic_number_exact(s0.graph).chi,
                          chromatic_number_exact(s1.graph).chi});
        k += static_cast<int>(rng.below(2));
        auto c0 = permuted(*find_k_coloring(s0.graph, k), rng);
        auto c1 = permuted(*find_k_coloring(s1.graph, k), rng);
        c0.k = c1.k = k;
        MergeTrace trace;
        auto merged = merge_colorings(inst.graph, p, c0, c1, &trace);
        ASSERT_TRUE(proper(inst.graph, merged, k)) << to_graph6(inst.graph);
        for (const auto& counts : trace.compliant_counts) {
            EXPECT_TRUE(strictly_increasing(counts));
            EXPECT_EQ(counts.back(), p.cutset.size());
        }
        if (inst.graph.order() <= 14)
            EXPECT_TRUE(oracle_harmonious(inst.graph, p.parts, p.cutset));
    }
}

TEST(Merge, NonHarmoniousCutsetIsReported)
{
    // C6 with X = {0, 3} as one part: the two X paths have odd length 3.
    Graph c6 = named::cycle(6);
    HarmoniousPartition p{VertexSet(6, {0, 3}), {VertexSet(6, {0, 3})}, {VertexSet(6, {1, 2}), VertexSet(6, {4, 5})}};
    auto s0 = side_graph(c6, p, 0);
    auto c = *find_k_coloring(s0.graph, 2);
    EXPECT_THROW(merge_colorings(c6, p, c, c, nullptr), PreconditionViolation);
}

TEST(Merge, RejectsImproperInput)
{
    auto inst = planted::glued_hexagons();
    Coloring flat{std::vector<int>(6, 0), 2};
    EXPECT_THROW(merge_colorings(inst.graph, inst.partition, flat, flat), std::invalid_argument);
}

TEST(Composition, PlantedGluesStayOddHoleFree)
{
    Rng rng(606);
    int used = 0;
    for (int i = 0; i < 150; ++i) {
        auto inst = planted::make_instance(rng);
        auto s0 = side_graph(inst.graph, inst.partition, 0);
        auto s1 = side_graph(inst.graph, inst.partition, 1);
        if (find_odd_hole(s0.graph).found() || find_odd_hole(s1.graph).found())
            continue;
        ++used;
        EXPECT_FALSE(find_odd_hole(inst.graph).found()) << to_graph6(inst.graph);
    }
    EXPECT_GT(used, 100);
}
