#include "heptalab/detectors.hpp"
#include "heptalab/graph6.hpp"
#include "heptalab/random.hpp"
#include "heptalab/structures.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace heptalab;

namespace {

int mod(int i, int m)
{
    return ((i % m) + m) % m;
}

// Plain per-vertex re-implementations of the axioms. Each returns the number
// of the first axiom that fails, or -1.

bool complete(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    for (Vertex u : a)
        for (Vertex v : b)
            if (!g.adjacent(u, v))
                return false;
    return true;
}

bool anticomplete(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    for (Vertex u : a)
        for (Vertex v : b)
            if (g.adjacent(u, v))
                return false;
    return true;
}

bool linked(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    auto covered = [&](const VertexSet& x, const VertexSet& y) {
        for (Vertex u : x) {
            bool any = false;
            for (Vertex v : y)
                any = any || g.adjacent(u, v);
            if (!any)
                return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

bool stable(const Graph& g, const VertexSet& a)
{
    return anticomplete(g, a, a);
}

VertexSet nbrs(const Graph& g, Vertex v, const VertexSet& within)
{
    VertexSet out(g.order());
    for (Vertex u : within)
        if (g.adjacent(u, v))
            out.insert(u);
    return out;
}

int naive_heptagram(const Graph& g, const std::array<VertexSet, 7>& w)
{
    auto W = [&](int i) -> const VertexSet& { return w[static_cast<std::size_t>(mod(i, 7))]; };
    for (int i = 0; i < 7; ++i) {
        if (W(i).empty() || !stable(g, W(i)))
            return 1;
        for (int j = i + 1; j < 7; ++j)
            if (W(i).intersects(W(j)))
                return 1;
    }
    for (int i = 0; i < 7; ++i)
        if (!anticomplete(g, W(i), W(i + 3)) || !anticomplete(g, W(i), W(i + 4)))
            return 2;
    for (int i = 0; i < 7; ++i)
        if (!linked(g, W(i), W(i + 1)) || !linked(g, W(i), W(i + 2)))
            return 3;
    for (int i = 0; i < 7; ++i)
        for (Vertex u : W(i - 1))
            for (Vertex v : W(i))
                for (Vertex x : W(i + 1)) {
                    bool uv = g.adjacent(u, v), vx = g.adjacent(v, x), ux = g.adjacent(u, x);
                    if (uv && vx && !ux)
                        return 4;
                    if (!uv && !vx && ux)
                        return 5;
                }
    for (int i = 0; i < 7; ++i)
        for (Vertex u : W(i - 1))
            for (Vertex v : W(i))
                for (Vertex x : W(i + 1))
                    for (Vertex y : W(i + 2))
                        if (g.adjacent(u, x) && g.adjacent(v, y) && !g.adjacent(u, v) && !g.adjacent(x, y))
                            return 6;
    return -1;
}

int naive_heptagram_type(const Graph& g, const HeptagramTypeWitness& h)
{
    auto W = [&](int i) -> const VertexSet& { return h.w[static_cast<std::size_t>(mod(i, 7))]; };
    auto Y = [&](int i) -> const VertexSet& { return h.y[static_cast<std::size_t>(mod(i, 7))]; };
    VertexSet all(g.order());
    std::size_t total = 0;
    for (int i = 0; i < 7; ++i) {
        if (W(i).empty() || !stable(g, W(i)) || !stable(g, Y(i)))
            return 0;
        all |= W(i);
        all |= Y(i);
        total += W(i).size() + Y(i).size();
    }
    if (total != g.order() || all.size() != g.order())
        return 0;
    for (int i = 0; i < 7; ++i)
        if (!anticomplete(g, W(i), W(i + 3)))
            return 1;
    for (int i = 1; i < 7; ++i)
        if (!complete(g, W(i), W(i + 2)))
            return 2;
    if (!linked(g, W(0), W(2)))
        return 2;
    for (int i : {2, 3, 5, 6})
        if (!complete(g, W(i), W(i + 1)))
            return 3;
    for (int i : {0, 1, 4})
        if (!linked(g, W(i), W(i + 1)))
            return 3;
    for (Vertex a : W(0))
        for (Vertex b : W(1))
            for (Vertex c : W(2)) {
                if (g.adjacent(a, b) && g.adjacent(b, c) && !g.adjacent(a, c))
                    return 4;
                if (!g.adjacent(a, b) && !g.adjacent(b, c) && g.adjacent(a, c))
                    return 5;
            }
    for (int i = 0; i < 7; ++i)
        for (Vertex y : Y(i)) {
            for (int d : {0, 3, -3})
                if (nbrs(g, y, W(i + d)).empty())
                    return 6;
            for (int d : {1, 2, -1, -2})
                if (!nbrs(g, y, W(i + d)).empty())
                    return 6;
        }
    for (int i = 0; i < 7; ++i)
        for (Vertex y : Y(i)) {
            VertexSet np = nbrs(g, y, W(i + 3)), nm = nbrs(g, y, W(i - 3)), n0 = nbrs(g, y, W(i));
            if (!complete(g, np, nm) || !anticomplete(g, np, W(i - 3) - nm) || !anticomplete(g, nm, W(i + 3) - np))
                return 7;
            for (int d : {1, 2, -1, -2})
                if (!complete(g, n0, W(i + d)))
                    return 7;
        }
    for (int i = 0; i < 7; ++i)
        if (!complete(g, Y(i), Y(i + 1)) || !anticomplete(g, Y(i), Y(i + 2)) || !anticomplete(g, Y(i), Y(i + 3)))
            return 8;
    for (int i = 0; i < 7; ++i) {
        VertexSet far = W(i - 3) | W(i + 3);
        if (complete(g, Y(i), far))
            continue;
        if (!complete(g, far, W(i - 2) | W(i + 2)))
            return 9;
        for (int d : {1, -1, 3, -3})
            if (!Y(i + d).empty())
                return 9;
    }
    for (int i = 0; i < 7; ++i)
        if (!Y(i).empty() && !Y(i + 1).empty() && !Y(i + 2).empty())
            return 10;
    return -1;
}

int naive_t11(const Graph& g, const T11Witness& t)
{
    auto W = [&](int i) -> const VertexSet& { return t.w[static_cast<std::size_t>(mod(i, 11))]; };
    std::size_t total = 0;
    for (int i = 0; i < 11; ++i) {
        if (W(i).empty() || !stable(g, W(i)))
            return 0;
        total += W(i).size();
    }
    if (total != g.order())
        return 0;
    for (int i = 0; i < 11; ++i) {
        if (!anticomplete(g, W(i), W(i + 1)) || !anticomplete(g, W(i), W(i + 2)))
            return 1;
        for (int d : {3, 4, 5})
            if (!complete(g, W(i), W(i + d)))
                return 1;
    }
    return -1;
}

Graph toggle_random_edge(const Graph& g, Rng& rng)
{
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges())
        b.add_edge(u, v);
    Vertex u = rng.below(g.order());
    Vertex v = rng.below(g.order() - 1);
    if (v >= u)
        ++v;
    if (b.adjacent(u, v))
        b.remove_edge(u, v);
    else
        b.add_edge(u, v);
    return b.build();
}

HeptagramWitness singleton_heptagram()
{
    HeptagramWitness w;
    for (Vertex i = 0; i < 7; ++i)
        w.w[i] = VertexSet(7, {i});
    return w;
}

// Seven-antihole on 0..6 plus `extra` vertices whose edges are given.
Graph antihole_plus(std::size_t extra, std::initializer_list<Edge> edges)
{
    GraphBuilder b(7 + extra);
    for (auto [u, v] : named::c7_complement().edges())
        b.add_edge(u, v);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return b.build();
}

HeptagramWitness widen(const HeptagramWitness& w, std::size_t n)
{
    HeptagramWitness out;
    for (std::size_t i = 0; i < 7; ++i)
        out.w[i] = VertexSet::from_range(n, w.w[i].to_vector());
    return out;
}

std::array<std::size_t, 7> random_y_sizes(Rng& rng)
{
    // Y parts on indices with no three cyclically consecutive nonempty.
    static const std::vector<std::vector<int>> patterns{
        {}, {0}, {0, 1}, {0, 3}, {0, 1, 3, 4}, {0, 2}, {1, 4}, {2, 5}, {0, 1, 4}};
    const auto& pat = patterns[rng.below(patterns.size())];
    int shift = static_cast<int>(rng.below(7));
    std::array<std::size_t, 7> y{};
    for (int i : pat)
        y[static_cast<std::size_t>(mod(i + shift, 7))] = 1 + rng.below(2);
    return y;
}

} // namespace

TEST(VerifyHeptagram, AntiholeSingletons)
{
    EXPECT_TRUE(verify_heptagram(named::c7_complement(), singleton_heptagram()));
    GraphBuilder b(7);
    for (auto [u, v] : named::c7_complement().edges())
        if (!(u == 0 && v == 1))
            b.add_edge(u, v);
    auto r = verify_heptagram(b.build(), singleton_heptagram());
    EXPECT_FALSE(r);
    EXPECT_EQ(r.axiom, 3);
    EXPECT_EQ(naive_heptagram(b.build(), singleton_heptagram().w), 3);
}

TEST(VerifyHeptagram, CompleteBlowUp)
{
    auto gen = generate_heptagram_type({2, 2, 2, 2, 2, 2, 2}, {0, 0, 0, 0, 0, 0, 0});
    HeptagramWitness w{gen.witness.w};
    EXPECT_TRUE(verify_heptagram(gen.graph, w));
    EXPECT_EQ(naive_heptagram(gen.graph, w.w), -1);
}

TEST(VerifyHeptagram, AgreesWithNaiveUnderPerturbation)
{
    Rng rng(100);
    int failures = 0;
    for (int i = 0; i < 600; ++i) {
        std::array<std::size_t, 7> ws{};
        for (auto& s : ws)
            s = 1 + rng.below(2);
        auto gen = generate_heptagram_type(ws, {0, 0, 0, 0, 0, 0, 0});
        Graph g = toggle_random_edge(gen.graph, rng);
        HeptagramWitness w{gen.witness.w};
        auto r = verify_heptagram(g, w);
        int expected = naive_heptagram(g, w.w);
        ASSERT_EQ(r.holds, expected == -1) << to_graph6(g);
        if (!r.holds) {
            EXPECT_EQ(r.axiom, expected);
            ++failures;
        }
    }
    EXPECT_GT(failures, 100);
}

TEST(VerifyHeptagramType, Examples)
{
    auto empty_y = generate_heptagram_type({1, 1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 0});
    EXPECT_EQ(empty_y.graph, named::c7_complement());
    EXPECT_TRUE(verify_heptagram_type(empty_y.graph, empty_y.witness));

    auto one_y = generate_heptagram_type({1, 1, 1, 1, 1, 1, 1}, {1, 0, 0, 0, 0, 0, 0});
    ASSERT_EQ(one_y.graph.order(), 8U);
    EXPECT_TRUE(verify_heptagram_type(one_y.graph, one_y.witness));
    EXPECT_FALSE(find_odd_hole(one_y.graph).found());
    Vertex y = *one_y.witness.y[0].first();
    for (int i : {0, 3, 4})
        EXPECT_TRUE(one_y.graph.adjacent(y, *one_y.witness.w[static_cast<std::size_t>(i)].first()));

    GraphBuilder b(8);
    for (auto [u, v] : one_y.graph.edges())
        b.add_edge(u, v);
    b.add_edge(y, *one_y.witness.w[1].first());
    auto r = verify_heptagram_type(b.build(), one_y.witness);
    EXPECT_FALSE(r);
    EXPECT_EQ(r.axiom, 6);
}

TEST(VerifyHeptagramType, AgreesWithNaiveUnderPerturbation)
{
    Rng rng(101);
    int failures = 0;
    for (int i = 0; i < 800; ++i) {
        std::array<std::size_t, 7> ws{};
        for (auto& s : ws)
            s = 1 + rng.below(2);
        auto gen = generate_heptagram_type(ws, random_y_sizes(rng));
        ASSERT_EQ(naive_heptagram_type(gen.graph, gen.witness), -1);
        Graph g = toggle_random_edge(gen.graph, rng);
        auto r = verify_heptagram_type(g, gen.witness);
        int expected = naive_heptagram_type(g, gen.witness);
        ASSERT_EQ(r.holds, expected == -1) << to_graph6(g);
        if (!r.holds) {
            EXPECT_EQ(r.axiom, expected) << to_graph6(g) << ' ' << r.detail;
            ++failures;
        }
    }
    EXPECT_GT(failures, 100);
}

TEST(VerifyT11, Examples)
{
    T11Witness w;
    for (Vertex i = 0; i < 11; ++i)
        w.w[i] = VertexSet(11, {i});
    EXPECT_TRUE(verify_t11_type(named::t11_circulant(), w));
    GraphBuilder b(11);
    for (auto [u, v] : named::t11_circulant().edges())
        if (!(u == 0 && v == 3))
            b.add_edge(u, v);
    EXPECT_FALSE(verify_t11_type(b.build(), w));
    auto gen = generate_t11_type({2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    EXPECT_EQ(gen.graph.order(), 12U);
    EXPECT_TRUE(verify_t11_type(gen.graph, gen.witness));
}

TEST(VerifyT11, AgreesWithNaiveUnderPerturbation)
{
    Rng rng(102);
    for (int i = 0; i < 300; ++i) {
        std::array<std::size_t, 11> s{};
        for (auto& x : s)
            x = 1 + rng.below(2);
        auto gen = generate_t11_type(s);
        Graph g = toggle_random_edge(gen.graph, rng);
        EXPECT_EQ(verify_t11_type(g, gen.witness).holds, naive_t11(g, gen.witness) == -1);
        EXPECT_FALSE(verify_t11_type(g, gen.witness));
    }
}

TEST(RecognizeT11, Examples)
{
    auto r = recognize_t11_type(named::t11_circulant());
    ASSERT_TRUE(r.has_value());
    for (const auto& part : r->w)
        EXPECT_EQ(part.size(), 1U);
    EXPECT_TRUE(verify_t11_type(named::t11_circulant(), *r));
    EXPECT_FALSE(recognize_t11_type(named::c7_complement()).has_value());
    EXPECT_FALSE(recognize_t11_type(named::petersen()).has_value());
}

TEST(RecognizeT11, ShuffledBlowUps)
{
    Rng rng(103);
    for (int i = 0; i < 40; ++i) {
        std::array<std::size_t, 11> s{};
        for (auto& x : s)
            x = 1 + rng.below(3);
        auto gen = generate_t11_type(s);
        auto perm = random_permutation(gen.graph.order(), rng);
        Graph g = relabel(gen.graph, perm);
        auto r = recognize_t11_type(g);
        ASSERT_TRUE(r.has_value());
        EXPECT_EQ(naive_t11(g, *r), -1);
        EXPECT_EQ(size_signature(*r), size_signature(gen.witness));
    }
}

TEST(RecognizeHeptagramType, Examples)
{
    auto r = recognize_heptagram_type(named::c7_complement());
    ASSERT_TRUE(r.has_value());
    for (int i = 0; i < 7; ++i) {
        EXPECT_EQ(r->w[static_cast<std::size_t>(i)].size(), 1U);
        EXPECT_TRUE(r->y[static_cast<std::size_t>(i)].empty());
    }
    EXPECT_FALSE(recognize_heptagram_type(named::cycle(5)).has_value());
    EXPECT_FALSE(recognize_heptagram_type(named::t11_circulant()).has_value());
}

TEST(RecognizeHeptagramType, ShuffledGeneratorOutput)
{
    Rng rng(104);
    for (int i = 0; i < 60; ++i) {
        std::array<std::size_t, 7> ws{};
        for (auto& s : ws)
            s = 1 + rng.below(3);
        auto ys = i == 0 ? std::array<std::size_t, 7>{0, 0, 2, 0, 0, 0, 0} : random_y_sizes(rng);
        auto gen = generate_heptagram_type(ws, ys);
        auto perm = random_permutation(gen.graph.order(), rng);
        Graph g = relabel(gen.graph, perm);
        auto r = recognize_heptagram_type(g);
        ASSERT_TRUE(r.has_value()) << to_graph6(g);
        EXPECT_EQ(naive_heptagram_type(g, *r), -1);
        EXPECT_EQ(size_signature(*r), size_signature(gen.witness));
    }
}

TEST(ClassifyVertex, Examples)
{
    // y complete to W0, W3, W4 of the antihole.
    Graph gy = antihole_plus(1, {{7, 0}, {7, 3}, {7, 4}});
    auto cy = classify_vertex(gy, widen(singleton_heptagram(), 8), 7);
    EXPECT_EQ(cy.kind, VertexClassification::Kind::y_vertex);
    EXPECT_EQ(cy.type, 0);

    // Adjacent to w3 and w4 only: a hat of type 0.
    Graph gh = antihole_plus(1, {{7, 3}, {7, 4}});
    auto ch = classify_vertex(gh, widen(singleton_heptagram(), 8), 7);
    EXPECT_EQ(ch.kind, VertexClassification::Kind::hat);
    EXPECT_EQ(ch.type, 0);
    EXPECT_TRUE(ch.tail_ready);

    Graph gl = antihole_plus(1, {{7, 1}});
    auto cl = classify_vertex(gl, widen(singleton_heptagram(), 8), 7);
    EXPECT_EQ(cl.kind, VertexClassification::Kind::local);
    EXPECT_EQ(cl.window, 1);
    EXPECT_EQ(cl.n[1], VertexSet(8, {1}));

    Graph gu = antihole_plus(1, {{7, 0}, {7, 2}, {7, 4}});
    EXPECT_EQ(classify_vertex(gu, widen(singleton_heptagram(), 8), 7).kind,
              VertexClassification::Kind::unclassifiable);

    EXPECT_THROW(classify_vertex(gu, widen(singleton_heptagram(), 8), 3), std::invalid_argument);
    EXPECT_EQ(to_string(VertexClassification::Kind::y_vertex), "y_vertex");
}

TEST(FindTails, Examples)
{
    auto w8 = widen(singleton_heptagram(), 8);
    EXPECT_TRUE(find_tails(antihole_plus(1, {}), w8, VertexSet(8)).empty());

    Graph gy = antihole_plus(1, {{7, 0}, {7, 3}, {7, 4}});
    auto ty = find_tails(gy, w8, VertexSet(8, {7}));
    ASSERT_EQ(ty.size(), 1U);
    EXPECT_EQ(ty[0].path, (std::vector<Vertex>{7}));
    EXPECT_EQ(ty[0].type, 0);

    // Hat 7 on w3, w4; path 7-8-9; 9 sees w0, which is complete to W5, W6, W1, W2.
    Graph gt = antihole_plus(3, {{7, 3}, {7, 4}, {7, 8}, {8, 9}, {9, 0}});
    auto w10 = widen(singleton_heptagram(), 10);
    auto tt = find_tails(gt, w10, VertexSet(10, {7, 8, 9}));
    ASSERT_EQ(tt.size(), 1U);
    EXPECT_EQ(tt[0].path, (std::vector<Vertex>{7, 8, 9}));
    EXPECT_EQ(tt[0].type, 0);
    EXPECT_EQ(classify_vertex(gt, w10, 9).kind, VertexClassification::Kind::tail_member);

    // An even path is not a tail.
    Graph ge = antihole_plus(2, {{7, 3}, {7, 4}, {7, 8}, {8, 0}});
    EXPECT_TRUE(find_tails(ge, widen(singleton_heptagram(), 9), VertexSet(9, {7, 8})).empty());
    EXPECT_THROW(find_tails(gt, w10, VertexSet(10, {0, 7})), std::invalid_argument);
}

TEST(GrowHeptagram, AbsorbsBlowUpVertices)
{
    auto gen = generate_heptagram_type({2, 1, 3, 1, 2, 1, 1}, {0, 0, 0, 0, 0, 0, 0});
    HeptagramWitness seed;
    for (std::size_t i = 0; i < 7; ++i)
        seed.w[i] = VertexSet(gen.graph.order(), {*gen.witness.w[i].first()});
    auto grown = grow_heptagram(gen.graph, seed);
    EXPECT_TRUE(verify_heptagram(gen.graph, grown));
    for (std::size_t i = 0; i < 7; ++i)
        EXPECT_EQ(grown.w[i], gen.witness.w[i]);
}

TEST(GenerateT11, Examples)
{
    auto one = generate_t11_type({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    EXPECT_EQ(one.graph, named::t11_circulant());
    EXPECT_THROW(generate_t11_type({0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}), std::invalid_argument);
    Rng rng(105);
    for (int i = 0; i < 50; ++i) {
        std::array<std::size_t, 11> s{};
        for (auto& x : s)
            x = 1 + rng.below(3);
        auto gen = generate_t11_type(s);
        EXPECT_TRUE(verify_t11_type(gen.graph, gen.witness));
        EXPECT_FALSE(find_odd_hole(gen.graph).found());
        EXPECT_FALSE(find_full_house(gen.graph).has_value());
    }
}

TEST(GenerateHeptagramType, InfeasibleSizes)
{
    try {
        generate_heptagram_type({1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 0, 0, 0, 0});
        FAIL();
    } catch (const InfeasibleSpec& e) {
        EXPECT_EQ(e.axiom(), 10);
    }
    try {
        generate_heptagram_type({1, 0, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 0});
        FAIL();
    } catch (const InfeasibleSpec& e) {
        EXPECT_EQ(e.axiom(), 0);
    }
}

TEST(GenerateHeptagramType, OutputsAreClassMembers)
{
    Rng rng(106);
    for (int i = 0; i < 60; ++i) {
        std::array<std::size_t, 7> ws{};
        for (auto& s : ws)
            s = 1 + rng.below(3);
        auto gen = generate_heptagram_type(ws, random_y_sizes(rng));
        EXPECT_TRUE(verify_heptagram_type(gen.graph, gen.witness));
        EXPECT_FALSE(find_odd_hole(gen.graph).found()) << to_graph6(gen.graph);
        EXPECT_FALSE(find_full_house(gen.graph).has_value()) << to_graph6(gen.graph);
    }
}

TEST(GenerateHeptagramType, CustomProfile)
{
    Rng rng(107);
    for (int i = 0; i < 10; ++i) {
        std::array<std::size_t, 7> ws{};
        for (auto& s : ws)
            s = 1 + rng.below(2);
        auto gen = generate_heptagram_type(ws, random_y_sizes(rng), HeptagramProfile::custom, &rng);
        EXPECT_GE(gen.attempts, 1U);
        EXPECT_EQ(naive_heptagram_type(gen.graph, gen.witness), -1);
        EXPECT_FALSE(find_odd_hole(gen.graph).found());
        EXPECT_FALSE(find_full_house(gen.graph).has_value());
    }
    EXPECT_THROW(generate_heptagram_type({1, 1, 1, 1, 1, 1, 1}, {}, HeptagramProfile::custom, nullptr),
                 std::invalid_argument);
}

TEST(Symmetry, SignaturesAreDihedralInvariant)
{
    auto gen = generate_heptagram_type({3, 1, 2, 1, 1, 2, 1}, {0, 1, 0, 0, 2, 0, 0});
    auto sig = size_signature(gen.witness);
    for (int shift = 0; shift < 7; ++shift)
        for (bool reflect : {false, true})
            EXPECT_EQ(size_signature(transform(gen.witness, shift, reflect)), sig);
    auto t = generate_t11_type({3, 1, 1, 2, 1, 1, 1, 1, 1, 1, 2});
    auto canon = canonicalize(t.witness);
    EXPECT_TRUE(verify_t11_type(t.graph, canon));
    EXPECT_EQ(size_signature(canon), size_signature(t.witness));
    EXPECT_EQ(size_signature(t.witness).front(), 1U);
}

TEST(PropertySuite, HoldsOnGeneratedWitnesses)
{
    Rng rng(108);
    for (int i = 0; i < 60; ++i) {
        std::array<std::size_t, 7> ws{};
        for (auto& s : ws)
            s = 1 + rng.below(3);
        auto gen = i % 3 == 0 ? generate_heptagram_type(ws, random_y_sizes(rng), HeptagramProfile::custom, &rng)
                              : generate_heptagram_type(ws, random_y_sizes(rng));
        HeptagramWitness w{gen.witness.w};
        VertexSet outside(gen.graph.order());
        for (const auto& y : gen.witness.y)
            outside |= y;
        for (const auto& check : heptagram_property_suite(gen.graph, w, outside))
            EXPECT_TRUE(check.holds) << check.name << ": " << check.detail << " in " << to_graph6(gen.graph);
    }
}

TEST(PropertySuite, DetectsViolations)
{
    // Perfect matchings between W0-W1 and W2-W3, everything else as in the
    // complete blow-up: neither pair is complete.
    auto gen = generate_heptagram_type({2, 2, 2, 2, 2, 2, 2}, {0, 0, 0, 0, 0, 0, 0});
    GraphBuilder b(gen.graph.order());
    for (auto [u, v] : gen.graph.edges())
        b.add_edge(u, v);
    for (std::size_t i : {0U, 2U}) {
        auto a = gen.witness.w[i].to_vector();
        auto c = gen.witness.w[i + 1].to_vector();
        b.remove_edge(a[0], c[1]);
        b.remove_edge(a[1], c[0]);
    }
    HeptagramWitness w{gen.witness.w};
    EXPECT_FALSE(check_alternating_completeness(b.build(), w).holds);

    // Two adjacent Y vertices of type 0.
    Graph gy = antihole_plus(2, {{7, 0}, {7, 3}, {7, 4}, {8, 0}, {8, 3}, {8, 4}, {7, 8}});
    EXPECT_FALSE(check_same_type_y_nonadjacent(gy, widen(singleton_heptagram(), 9), VertexSet(9, {7, 8})).holds);
    // Y vertices of types 0 and 1 that are not adjacent.
    Graph gv = antihole_plus(2, {{7, 0}, {7, 3}, {7, 4}, {8, 1}, {8, 4}, {8, 5}});
    EXPECT_FALSE(check_consecutive_v_vertices(gv, widen(singleton_heptagram(), 9), VertexSet(9, {7, 8})).holds);
}
