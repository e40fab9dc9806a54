#include "heptalab/structures.hpp"

#include "heptalab/detectors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace heptalab {

namespace {

int mod(int a, int m)
{
    return ((a % m) + m) % m;
}

template <class T, std::size_t K>
const T& at(const std::array<T, K>& parts, int i)
{
    return parts[static_cast<std::size_t>(mod(i, static_cast<int>(K)))];
}

std::string label(char kind, int i, int m)
{
    return std::string(1, kind) + "[" + std::to_string(mod(i, m)) + "]";
}

AxiomReport fail(int axiom, std::vector<Vertex> witness, std::string detail)
{
    return AxiomReport{false, axiom, std::move(witness), std::move(detail)};
}

std::optional<Edge> missing_edge(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    for (Vertex u : a) {
        VertexSet miss = b - g.neighbors(u);
        if (!miss.empty())
            return Edge{u, *miss.first()};
    }
    return std::nullopt;
}

std::optional<Edge> present_edge(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    for (Vertex u : a) {
        VertexSet hit = b & g.neighbors(u);
        if (!hit.empty())
            return Edge{u, *hit.first()};
    }
    return std::nullopt;
}

std::optional<Vertex> unlinked_vertex(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    for (Vertex u : a)
        if (!g.neighbors(u).intersects(b))
            return u;
    for (Vertex u : b)
        if (!g.neighbors(u).intersects(a))
            return u;
    return std::nullopt;
}

template <std::size_t K>
void require_universe(const Graph& g, const std::array<VertexSet, K>& parts)
{
    for (const auto& p : parts)
        if (p.universe() != g.order())
            throw std::invalid_argument("witness sets do not match the graph order");
}

std::optional<AxiomReport> check_complete(const Graph& g, int axiom, const VertexSet& a, const VertexSet& b,
                                          const std::string& what)
{
    if (auto e = missing_edge(g, a, b))
        return fail(axiom, {e->first, e->second}, what + " is not complete");
    return std::nullopt;
}

std::optional<AxiomReport> check_anticomplete(const Graph& g, int axiom, const VertexSet& a, const VertexSet& b,
                                              const std::string& what)
{
    if (auto e = present_edge(g, a, b))
        return fail(axiom, {e->first, e->second}, what + " is not anticomplete");
    return std::nullopt;
}

std::optional<AxiomReport> check_linked(const Graph& g, int axiom, const VertexSet& a, const VertexSet& b,
                                        const std::string& what)
{
    if (auto v = unlinked_vertex(g, a, b))
        return fail(axiom, {*v}, what + " are not linked");
    return std::nullopt;
}

std::string pair(char k1, int i, char k2, int j, int m)
{
    return label(k1, i, m) + "-" + label(k2, j, m);
}

// Center i of a triple W[i-1], W[i], W[i+1]: a middle vertex complete to the
// two ends forces the ends adjacent.
std::optional<AxiomReport> check_closing(const Graph& g, int axiom, const VertexSet& left, const VertexSet& mid,
                                         const VertexSet& right)
{
    for (Vertex v : mid)
        for (Vertex u : left & g.neighbors(v)) {
            VertexSet miss = (right & g.neighbors(v)) - g.neighbors(u);
            if (!miss.empty())
                return fail(axiom, {u, v, *miss.first()}, "middle vertex adjacent to both ends, ends nonadjacent");
        }
    return std::nullopt;
}

// A middle vertex anticomplete to the two ends forces the ends nonadjacent.
std::optional<AxiomReport> check_opening(const Graph& g, int axiom, const VertexSet& left, const VertexSet& mid,
                                         const VertexSet& right)
{
    for (Vertex v : mid)
        for (Vertex u : left - g.neighbors(v)) {
            VertexSet hit = (right & g.neighbors(u)) - g.neighbors(v);
            if (!hit.empty())
                return fail(axiom, {u, v, *hit.first()}, "middle vertex adjacent to neither end, ends adjacent");
        }
    return std::nullopt;
}

std::optional<AxiomReport> check_stable_parts(const Graph& g, int axiom, char kind, const VertexSet* parts,
                                              std::size_t count, bool nonempty)
{
    VertexSet seen(g.order());
    for (std::size_t i = 0; i < count; ++i) {
        const int m = static_cast<int>(count);
        if (nonempty && parts[i].empty())
            return fail(axiom, {}, label(kind, static_cast<int>(i), m) + " is empty");
        VertexSet overlap = parts[i] & seen;
        if (!overlap.empty())
            return fail(axiom, {*overlap.first()}, label(kind, static_cast<int>(i), m) + " overlaps another part");
        seen |= parts[i];
        if (auto e = present_edge(g, parts[i], parts[i]))
            return fail(axiom, {e->first, e->second}, label(kind, static_cast<int>(i), m) + " is not stable");
    }
    return std::nullopt;
}

std::array<VertexSet, 7> neighborhoods(const Graph& g, const HeptagramWitness& w, Vertex v)
{
    std::array<VertexSet, 7> n;
    for (std::size_t i = 0; i < 7; ++i)
        n[i] = g.neighbors(v) & w.w[i];
    return n;
}

// N(v) in W[t-3] and W[t+3] complete to each other and anticomplete to the
// rest of the opposite part.
bool ends_coherent(const Graph& g, const HeptagramWitness& w, const std::array<VertexSet, 7>& n, int t)
{
    const VertexSet& a = at(n, t - 3);
    const VertexSet& b = at(n, t + 3);
    return !missing_edge(g, a, b) && !present_edge(g, a, at(w.w, t + 3) - b) &&
           !present_edge(g, b, at(w.w, t - 3) - a);
}

// N(v) in W[t] complete to W[t-2], W[t-1], W[t+1], W[t+2].
bool center_coherent(const Graph& g, const HeptagramWitness& w, const std::array<VertexSet, 7>& n, int t)
{
    VertexSet around = at(w.w, t - 2) | at(w.w, t - 1) | at(w.w, t + 1) | at(w.w, t + 2);
    return !missing_edge(g, at(n, t), around);
}

std::optional<int> y_type(const Graph& g, const HeptagramWitness& w, const std::array<VertexSet, 7>& n)
{
    for (int t = 0; t < 7; ++t) {
        if (at(n, t).empty() || at(n, t + 3).empty() || at(n, t - 3).empty())
            continue;
        if (!at(n, t - 2).empty() || !at(n, t - 1).empty() || !at(n, t + 1).empty() || !at(n, t + 2).empty())
            continue;
        if (ends_coherent(g, w, n, t) && center_coherent(g, w, n, t))
            return t;
    }
    return std::nullopt;
}

VertexSet union_of(const Graph& g, const std::array<VertexSet, 7>& parts)
{
    VertexSet all(g.order());
    for (const auto& p : parts)
        all |= p;
    return all;
}

} // namespace

AxiomReport verify_heptagram(const Graph& g, const HeptagramWitness& w)
{
    require_universe(g, w.w);
    if (auto r = check_stable_parts(g, 1, 'W', w.w.data(), 7, true))
        return *r;
    for (int i = 0; i < 7; ++i) {
        if (auto r = check_anticomplete(g, 2, at(w.w, i), at(w.w, i + 3) | at(w.w, i + 4),
                                        label('W', i, 7) + " to " + label('W', i + 3, 7) + "+" + label('W', i + 4, 7)))
            return *r;
    }
    for (int i = 0; i < 7; ++i) {
        if (auto r = check_linked(g, 3, at(w.w, i), at(w.w, i + 1), pair('W', i, 'W', i + 1, 7)))
            return *r;
        if (auto r = check_linked(g, 3, at(w.w, i), at(w.w, i + 2), pair('W', i, 'W', i + 2, 7)))
            return *r;
    }
    for (int i = 0; i < 7; ++i)
        if (auto r = check_closing(g, 4, at(w.w, i - 1), at(w.w, i), at(w.w, i + 1)))
            return *r;
    for (int i = 0; i < 7; ++i)
        if (auto r = check_opening(g, 5, at(w.w, i - 1), at(w.w, i), at(w.w, i + 1)))
            return *r;
    for (int i = 0; i < 7; ++i) {
        const VertexSet& wu = at(w.w, i - 1);
        const VertexSet& wv = at(w.w, i);
        const VertexSet& ww = at(w.w, i + 1);
        const VertexSet& wx = at(w.w, i + 2);
        for (Vertex u : wu)
            for (Vertex x2 : ww & g.neighbors(u))
                for (Vertex v : wv - g.neighbors(u)) {
                    VertexSet bad = (wx & g.neighbors(v)) - g.neighbors(x2);
                    if (!bad.empty())
                        return fail(6, {u, v, x2, *bad.first()},
                                    "uw and vx are edges but neither uv nor wx is, around " + label('W', i, 7));
                }
    }
    return {};
}

AxiomReport verify_heptagram_type(const Graph& g, const HeptagramTypeWitness& w)
{
    require_universe(g, w.w);
    require_universe(g, w.y);
    std::array<VertexSet, 14> all;
    std::copy(w.w.begin(), w.w.end(), all.begin());
    std::copy(w.y.begin(), w.y.end(), all.begin() + 7);
    for (std::size_t i = 0; i < 7; ++i)
        if (w.w[i].empty())
            return fail(0, {}, label('W', static_cast<int>(i), 7) + " is empty");
    VertexSet seen(g.order());
    for (std::size_t i = 0; i < 14; ++i) {
        const std::string name = label(i < 7 ? 'W' : 'Y', static_cast<int>(i % 7), 7);
        VertexSet overlap = all[i] & seen;
        if (!overlap.empty())
            return fail(0, {*overlap.first()}, name + " overlaps another part");
        seen |= all[i];
        if (auto e = present_edge(g, all[i], all[i]))
            return fail(0, {e->first, e->second}, name + " is not stable");
    }
    if (seen != g.vertices())
        return fail(0, {*(g.vertices() - seen).first()}, "parts do not cover every vertex");

    const auto& W = w.w;
    const auto& Y = w.y;
    for (int i = 0; i < 7; ++i)
        if (auto r = check_anticomplete(g, 1, at(W, i), at(W, i + 3), pair('W', i, 'W', i + 3, 7)))
            return *r;
    for (int i = 1; i < 7; ++i)
        if (auto r = check_complete(g, 2, at(W, i), at(W, i + 2), pair('W', i, 'W', i + 2, 7)))
            return *r;
    if (auto r = check_linked(g, 2, W[0], W[2], pair('W', 0, 'W', 2, 7)))
        return *r;
    for (int i : {2, 3, 5, 6})
        if (auto r = check_complete(g, 3, at(W, i), at(W, i + 1), pair('W', i, 'W', i + 1, 7)))
            return *r;
    for (int i : {0, 1, 4})
        if (auto r = check_linked(g, 3, at(W, i), at(W, i + 1), pair('W', i, 'W', i + 1, 7)))
            return *r;
    if (auto r = check_closing(g, 4, W[0], W[1], W[2]))
        return *r;
    if (auto r = check_opening(g, 5, W[0], W[1], W[2]))
        return *r;

    const HeptagramWitness hw{W};
    for (int i = 0; i < 7; ++i) {
        for (Vertex y : at(Y, i)) {
            auto n = neighborhoods(g, hw, y);
            for (int d : {0, 3, -3})
                if (at(n, i + d).empty())
                    return fail(6, {y}, "vertex of " + label('Y', i, 7) + " has no neighbor in " + label('W', i + d, 7));
            for (int d : {1, 2, -1, -2})
                if (!at(n, i + d).empty())
                    return fail(6, {y, *at(n, i + d).first()},
                                "vertex of " + label('Y', i, 7) + " has a neighbor in " + label('W', i + d, 7));
        }
    }
    for (int i = 0; i < 7; ++i) {
        for (Vertex y : at(Y, i)) {
            auto n = neighborhoods(g, hw, y);
            const std::string name = "neighbors of " + std::to_string(y) + " in ";
            if (auto e = missing_edge(g, at(n, i + 3), at(n, i - 3)))
                return fail(7, {y, e->first, e->second}, name + label('W', i + 3, 7) + " and " + label('W', i - 3, 7) +
                                                             " are not complete");
            if (auto e = present_edge(g, at(n, i + 3), at(W, i - 3) - at(n, i - 3)))
                return fail(7, {y, e->first, e->second}, name + label('W', i + 3, 7) + " see a non-neighbor in " +
                                                             label('W', i - 3, 7));
            if (auto e = present_edge(g, at(n, i - 3), at(W, i + 3) - at(n, i + 3)))
                return fail(7, {y, e->first, e->second}, name + label('W', i - 3, 7) + " see a non-neighbor in " +
                                                             label('W', i + 3, 7));
            if (!center_coherent(g, hw, n, i)) {
                VertexSet around = at(W, i - 2) | at(W, i - 1) | at(W, i + 1) | at(W, i + 2);
                auto e = missing_edge(g, at(n, i), around);
                return fail(7, {y, e->first, e->second}, name + label('W', i, 7) + " are not complete to the parts at distance 1 and 2");
            }
        }
    }
    for (int i = 0; i < 7; ++i) {
        if (auto r = check_complete(g, 8, at(Y, i), at(Y, i + 1), pair('Y', i, 'Y', i + 1, 7)))
            return *r;
        if (auto r = check_anticomplete(g, 8, at(Y, i), at(Y, i + 2) | at(Y, i + 3),
                                        label('Y', i, 7) + " to " + label('Y', i + 2, 7) + "+" + label('Y', i + 3, 7)))
            return *r;
    }
    for (int i = 0; i < 7; ++i) {
        const VertexSet far = at(W, i - 3) | at(W, i + 3);
        auto e = missing_edge(g, at(Y, i), far);
        if (!e)
            continue;
        if (auto r = check_complete(g, 9, far, at(W, i - 2) | at(W, i + 2),
                                    label('Y', i, 7) + " is not complete to " + label('W', i - 3, 7) + "+" +
                                        label('W', i + 3, 7) + ", so " + label('W', i - 3, 7) + "+" +
                                        label('W', i + 3, 7) + " to " + label('W', i - 2, 7) + "+" + label('W', i + 2, 7)))
            return *r;
        VertexSet must_be_empty = at(Y, i - 1) | at(Y, i + 1) | at(Y, i - 3) | at(Y, i + 3);
        if (!must_be_empty.empty())
            return fail(9, {e->first, e->second, *must_be_empty.first()},
                        label('Y', i, 7) + " is not complete to " + label('W', i - 3, 7) + "+" + label('W', i + 3, 7) +
                            " but a Y part at distance 1 or 3 is nonempty");
    }
    for (int i = 0; i < 7; ++i)
        if (!at(Y, i).empty() && !at(Y, i + 1).empty() && !at(Y, i + 2).empty())
            return fail(10, {*at(Y, i).first(), *at(Y, i + 1).first(), *at(Y, i + 2).first()},
                        label('Y', i, 7) + ", " + label('Y', i + 1, 7) + " and " + label('Y', i + 2, 7) +
                            " are all nonempty");
    return {};
}

AxiomReport verify_t11_type(const Graph& g, const T11Witness& w)
{
    require_universe(g, w.w);
    if (auto r = check_stable_parts(g, 1, 'W', w.w.data(), 11, true))
        return *r;
    VertexSet covered(g.order());
    for (const auto& p : w.w)
        covered |= p;
    if (covered != g.vertices())
        return fail(1, {*(g.vertices() - covered).first()}, "parts do not cover every vertex");
    for (int i = 0; i < 11; ++i)
        for (int d : {1, 2})
            if (auto r = check_anticomplete(g, 2, at(w.w, i), at(w.w, i + d), pair('W', i, 'W', i + d, 11)))
                return *r;
    for (int i = 0; i < 11; ++i)
        for (int d : {3, 4, 5})
            if (auto r = check_complete(g, 3, at(w.w, i), at(w.w, i + d), pair('W', i, 'W', i + d, 11)))
                return *r;
    return {};
}

namespace {

// Backtracking assignment of vertices to labels under a pairwise adjacency
// table (0 = must be nonadjacent, 1 = must be adjacent, 2 = free). Calls
// `accept` on each complete assignment in which every label listed in
// `must_fill` is used; stops when it returns true or the budget runs out.
class LabelSearch {
public:
    LabelSearch(const Graph& g, std::vector<std::vector<int>> table, std::vector<bool> must_fill,
                std::uint64_t budget)
        : g_(g), table_(std::move(table)), must_fill_(std::move(must_fill)), budget_(budget),
          label_(g.order(), -1), used_(table_.size(), 0)
    {
    }

    bool run(const std::function<bool(const std::vector<int>&)>& accept, int first_label_limit)
    {
        accept_ = &accept;
        first_limit_ = first_label_limit;
        return step(0);
    }

private:
    bool step(Vertex v)
    {
        if (nodes_++ >= budget_)
            return false;
        const std::size_t n = g_.order();
        std::size_t missing = 0;
        for (std::size_t l = 0; l < used_.size(); ++l)
            if (must_fill_[l] && used_[l] == 0)
                ++missing;
        if (missing > n - v)
            return false;
        if (v == n)
            return (*accept_)(label_);
        const int limit = v == 0 && first_limit_ > 0 ? first_limit_ : static_cast<int>(table_.size());
        for (int l = 0; l < limit; ++l) {
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u) {
                int rule = table_[static_cast<std::size_t>(l)][static_cast<std::size_t>(label_[u])];
                if (rule != 2 && (rule == 1) != g_.adjacent(u, v))
                    ok = false;
            }
            if (!ok)
                continue;
            label_[v] = l;
            ++used_[static_cast<std::size_t>(l)];
            if (step(v + 1))
                return true;
            --used_[static_cast<std::size_t>(l)];
            label_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    std::vector<std::vector<int>> table_;
    std::vector<bool> must_fill_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> label_;
    std::vector<int> used_;
    const std::function<bool(const std::vector<int>&)>* accept_ = nullptr;
    int first_limit_ = 0;
};

int cyclic_distance(int a, int b, int m)
{
    int d = mod(a - b, m);
    return std::min(d, m - d);
}

T11Witness t11_from_labels(const Graph& g, const std::vector<int>& labels)
{
    T11Witness w;
    w.w.fill(VertexSet(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        w.w[static_cast<std::size_t>(labels[v])].insert(v);
    return w;
}

} // namespace

std::optional<T11Witness> recognize_t11_type(const Graph& g)
{
    const std::size_t n = g.order();
    if (n < 11)
        return std::nullopt;
    std::optional<T11Witness> result;
    std::set<VertexSet> tried;
    const Graph core = named::t11_circulant();
    for_each_induced_embedding(g, core, [&](const std::vector<Vertex>& emb) {
        VertexSet seed = VertexSet::from_range(n, emb);
        if (!tried.insert(seed).second)
            return true;
        T11Witness w;
        w.w.fill(VertexSet(n));
        for (std::size_t i = 0; i < 11; ++i)
            w.w[i].insert(emb[i]);
        VertexSet assigned = seed;
        for (bool changed = true; changed;) {
            changed = false;
            for (Vertex v : g.vertices() - assigned) {
                int pick = -1;
                int matches = 0;
                for (int i = 0; i < 11; ++i) {
                    const VertexSet& nv = g.neighbors(v);
                    bool ok = true;
                    for (int d : {0, 1, 2, -1, -2})
                        ok = ok && !nv.intersects(at(w.w, i + d));
                    for (int d : {3, 4, 5, -3, -4, -5})
                        ok = ok && at(w.w, i + d).is_subset_of(nv);
                    if (ok) {
                        pick = i;
                        ++matches;
                    }
                }
                if (matches == 1) {
                    w.w[static_cast<std::size_t>(pick)].insert(v);
                    assigned.insert(v);
                    changed = true;
                }
            }
        }
        if (assigned == g.vertices() && verify_t11_type(g, w)) {
            result = w;
            return false;
        }
        return tried.size() < 16;
    });
    if (result || n > 14)
        return result;

    std::vector<std::vector<int>> table(11, std::vector<int>(11));
    for (int a = 0; a < 11; ++a)
        for (int b = 0; b < 11; ++b)
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = cyclic_distance(a, b, 11) >= 3 ? 1 : 0;
    LabelSearch search(g, table, std::vector<bool>(11, true), 5'000'000);
    search.run(
        [&](const std::vector<int>& labels) {
            T11Witness w = t11_from_labels(g, labels);
            if (verify_t11_type(g, w)) {
                result = w;
                return true;
            }
            return false;
        },
        1);
    return result;
}

HeptagramWitness grow_heptagram(const Graph& g, HeptagramWitness w)
{
    VertexSet in_w = union_of(g, w.w);
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v : g.vertices() - in_w) {
            const VertexSet& nv = g.neighbors(v);
            for (int i = 0; i < 7; ++i) {
                if (nv.intersects(at(w.w, i)) || nv.intersects(at(w.w, i + 3)) || nv.intersects(at(w.w, i + 4)))
                    continue;
                if (!nv.intersects(at(w.w, i + 1)) || !nv.intersects(at(w.w, i - 1)) ||
                    !nv.intersects(at(w.w, i + 2)) || !nv.intersects(at(w.w, i - 2)))
                    continue;
                auto& part = w.w[static_cast<std::size_t>(i)];
                part.insert(v);
                if (verify_heptagram(g, w)) {
                    in_w.insert(v);
                    changed = true;
                    break;
                }
                part.erase(v);
            }
        }
    }
    return w;
}

HeptagramTypeWitness transform(const HeptagramTypeWitness& w, int shift, bool reflect)
{
    HeptagramTypeWitness out;
    for (int i = 0; i < 7; ++i) {
        const auto to = static_cast<std::size_t>(mod((reflect ? -i : i) + shift, 7));
        out.w[to] = w.w[static_cast<std::size_t>(i)];
        out.y[to] = w.y[static_cast<std::size_t>(i)];
    }
    return out;
}

namespace {

std::optional<HeptagramTypeWitness> fit_labeling(const Graph& g, const HeptagramTypeWitness& base)
{
    for (int reflect = 0; reflect < 2; ++reflect)
        for (int shift = 0; shift < 7; ++shift) {
            auto candidate = transform(base, shift, reflect == 1);
            if (verify_heptagram_type(g, candidate))
                return candidate;
        }
    return std::nullopt;
}

std::vector<std::vector<int>> heptagram_type_table()
{
    // Labels 0..6 are W parts, 7..13 are Y parts.
    std::vector<std::vector<int>> t(14, std::vector<int>(14, 2));
    auto set = [&](int a, int b, int rule) {
        t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = rule;
        t[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = rule;
    };
    for (int i = 0; i < 7; ++i) {
        set(i, i, 0);
        set(i, mod(i + 3, 7), 0);
        set(7 + i, 7 + i, 0);
        set(7 + i, 7 + mod(i + 1, 7), 1);
        for (int d : {2, 3})
            set(7 + i, 7 + mod(i + d, 7), 0);
        for (int d : {1, 2, -1, -2})
            set(7 + i, mod(i + d, 7), 0);
    }
    for (int i = 1; i < 7; ++i)
        set(i, mod(i + 2, 7), 1);
    for (int i : {2, 3, 5, 6})
        set(i, mod(i + 1, 7), 1);
    return t;
}

} // namespace

std::optional<HeptagramTypeWitness> recognize_heptagram_type(const Graph& g, const HeptagramRecognitionOptions& options)
{
    const std::size_t n = g.order();
    if (n < 7)
        return std::nullopt;
    std::optional<HeptagramTypeWitness> result;
    std::set<VertexSet> tried;
    const Graph core = named::c7_complement();
    for_each_induced_embedding(g, core, [&](const std::vector<Vertex>& emb) {
        VertexSet seed = VertexSet::from_range(n, emb);
        if (!tried.insert(seed).second)
            return true;
        HeptagramWitness hw;
        for (std::size_t i = 0; i < 7; ++i)
            hw.w[i] = VertexSet(n, {emb[i]});
        hw = grow_heptagram(g, hw);
        HeptagramTypeWitness base{hw.w, {}};
        base.y.fill(VertexSet(n));
        bool all_y = true;
        for (Vertex v : g.vertices() - union_of(g, hw.w)) {
            auto t = y_type(g, hw, neighborhoods(g, hw, v));
            if (!t) {
                all_y = false;
                break;
            }
            base.y[static_cast<std::size_t>(*t)].insert(v);
        }
        if (all_y)
            result = fit_labeling(g, base);
        return !result && tried.size() < options.max_seeds;
    });
    if (result || n > options.exhaustive_order_limit)
        return result;

    std::vector<bool> must_fill(14, false);
    std::fill(must_fill.begin(), must_fill.begin() + 7, true);
    LabelSearch search(g, heptagram_type_table(), must_fill, options.exhaustive_budget);
    search.run(
        [&](const std::vector<int>& labels) {
            HeptagramTypeWitness w;
            w.w.fill(VertexSet(n));
            w.y.fill(VertexSet(n));
            for (Vertex v = 0; v < n; ++v) {
                const int l = labels[v];
                (l < 7 ? w.w : w.y)[static_cast<std::size_t>(l % 7)].insert(v);
            }
            if (verify_heptagram_type(g, w)) {
                result = w;
                return true;
            }
            return false;
        },
        0);
    return result;
}

std::string_view to_string(VertexClassification::Kind kind) noexcept
{
    using K = VertexClassification::Kind;
    switch (kind) {
    case K::y_vertex: return "y_vertex";
    case K::hat: return "hat";
    case K::tail_member: return "tail_member";
    case K::local: return "local";
    case K::unclassifiable: return "unclassifiable";
    }
    return "unknown";
}

VertexClassification classify_vertex(const Graph& g, const HeptagramWitness& w, Vertex v)
{
    require_universe(g, w.w);
    const VertexSet in_w = union_of(g, w.w);
    if (v >= g.order() || in_w.contains(v))
        throw std::invalid_argument("classify_vertex needs a vertex outside the heptagram");
    VertexClassification c;
    c.vertex = v;
    c.n = neighborhoods(g, w, v);

    if (auto t = y_type(g, w, c.n)) {
        c.kind = VertexClassification::Kind::y_vertex;
        c.type = *t;
        return c;
    }
    for (int t = 0; t < 7; ++t) {
        if (at(c.n, t - 3).empty() || at(c.n, t + 3).empty())
            continue;
        bool rest_empty = true;
        for (int d : {0, 1, 2, -1, -2})
            rest_empty = rest_empty && at(c.n, t + d).empty();
        if (!rest_empty)
            continue;
        c.kind = VertexClassification::Kind::hat;
        c.type = t;
        c.tail_ready = ends_coherent(g, w, c.n, t);
        return c;
    }
    for (const auto& tail : find_tails(g, w, g.vertices() - in_w)) {
        if (std::find(tail.path.begin() + 1, tail.path.end(), v) != tail.path.end()) {
            c.kind = VertexClassification::Kind::tail_member;
            c.type = tail.type;
            return c;
        }
    }
    std::vector<int> touched;
    for (int i = 0; i < 7; ++i)
        if (!at(c.n, i).empty())
            touched.push_back(i);
    if (touched.empty()) {
        c.kind = VertexClassification::Kind::local;
        return c;
    }
    std::optional<int> best;
    for (int center = 0; center < 7; ++center) {
        bool fits = std::ranges::all_of(touched, [&](int i) { return cyclic_distance(i, center, 7) <= 1; });
        if (!fits)
            continue;
        bool inside = std::ranges::find(touched, center) != touched.end();
        if (!best || (inside && std::ranges::find(touched, *best) == touched.end()))
            best = center;
        if (touched.size() == 1 && center == touched.front())
            best = center;
    }
    if (best) {
        c.kind = VertexClassification::Kind::local;
        c.window = best;
    }
    return c;
}

std::vector<Tail> find_tails(const Graph& g, const HeptagramWitness& w, const VertexSet& outside, std::size_t limit)
{
    require_universe(g, w.w);
    if (outside.intersects(union_of(g, w.w)))
        throw std::invalid_argument("find_tails needs vertices outside the heptagram");
    std::vector<Tail> tails;
    std::vector<Vertex> path;

    for (int t = 0; t < 7; ++t) {
        const VertexSet forbidden = at(w.w, t - 3) | at(w.w, t + 3) | at(w.w, t - 1) | at(w.w, t + 1);
        // Bit 0: W[t-2] still anticomplete to the path; bit 1: W[t+2].
        auto allowed_after = [&](Vertex v, unsigned allowed) {
            if (g.neighbors(v).intersects(at(w.w, t - 2)))
                allowed &= ~1U;
            if (g.neighbors(v).intersects(at(w.w, t + 2)))
                allowed &= ~2U;
            return allowed;
        };
        auto finishes = [&](Vertex v) {
            return center_coherent(g, w, neighborhoods(g, w, v), t);
        };
        std::function<void(const VertexSet&, unsigned)> extend = [&](const VertexSet& inner, unsigned allowed) {
            const Vertex head = path.back();
            VertexSet next = (g.neighbors(head) & outside) - inner;
            VertexSet next_inner = inner | g.neighbors(head);
            next_inner.insert(head);
            for (Vertex c : next) {
                if (tails.size() >= limit)
                    return;
                if (g.neighbors(c).intersects(forbidden))
                    continue;
                unsigned a = allowed_after(c, allowed);
                if (a == 0)
                    continue;
                path.push_back(c);
                if (g.neighbors(c).intersects(at(w.w, t))) {
                    if (path.size() % 2 == 1 && finishes(c))
                        tails.push_back(Tail{path, t});
                } else {
                    extend(next_inner, a);
                }
                path.pop_back();
            }
        };

        for (Vertex v1 : outside) {
            if (tails.size() >= limit)
                return tails;
            auto n = neighborhoods(g, w, v1);
            if (at(n, t - 3).empty() || at(n, t + 3).empty() || !at(n, t - 1).empty() || !at(n, t + 1).empty())
                continue;
            if (!ends_coherent(g, w, n, t))
                continue;
            unsigned allowed = allowed_after(v1, 3U);
            if (allowed == 0)
                continue;
            path.assign(1, v1);
            if (!at(n, t).empty()) {
                if (finishes(v1))
                    tails.push_back(Tail{path, t});
                continue;
            }
            extend(VertexSet(g.order()), allowed);
        }
    }
    return tails;
}

GeneratedT11 generate_t11_type(const std::array<std::size_t, 11>& sizes)
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < 11; ++i) {
        if (sizes[i] == 0)
            throw InfeasibleSpec(1, "part W[" + std::to_string(i) + "] must be nonempty");
        n += sizes[i];
    }
    T11Witness w;
    w.w.fill(VertexSet(n));
    Vertex next = 0;
    for (std::size_t i = 0; i < 11; ++i)
        for (std::size_t k = 0; k < sizes[i]; ++k)
            w.w[i].insert(next++);
    GraphBuilder b(n);
    for (int i = 0; i < 11; ++i)
        for (int d : {3, 4, 5})
            b.join(at(w.w, i), at(w.w, i + d));
    return {b.build(), w};
}

namespace {

struct HeptagramLayout {
    std::size_t n = 0;
    HeptagramTypeWitness witness;
};

HeptagramLayout lay_out(const std::array<std::size_t, 7>& w_sizes, const std::array<std::size_t, 7>& y_sizes)
{
    HeptagramLayout out;
    for (std::size_t i = 0; i < 7; ++i)
        out.n += w_sizes[i] + y_sizes[i];
    out.witness.w.fill(VertexSet(out.n));
    out.witness.y.fill(VertexSet(out.n));
    Vertex next = 0;
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t k = 0; k < w_sizes[i]; ++k)
            out.witness.w[i].insert(next++);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t k = 0; k < y_sizes[i]; ++k)
            out.witness.y[i].insert(next++);
    return out;
}

// Joins a and b, keeping each edge with probability p when `sample` is set.
void connect(GraphBuilder& b, const VertexSet& x, const VertexSet& y, bool sample, const CustomProfileOptions& o,
             Rng* rng)
{
    sample = sample && rng->chance(o.partial_probability);
    const double p = o.edge_probability;
    for (Vertex u : x)
        for (Vertex v : y)
            if (!sample || rng->chance(p))
                b.add_edge(u, v);
}

} // namespace

GeneratedHeptagramType generate_heptagram_type(const std::array<std::size_t, 7>& w_sizes,
                                               const std::array<std::size_t, 7>& y_sizes, HeptagramProfile profile,
                                               Rng* rng, const CustomProfileOptions& custom)
{
    for (std::size_t i = 0; i < 7; ++i)
        if (w_sizes[i] == 0)
            throw InfeasibleSpec(0, "part W[" + std::to_string(i) + "] must be nonempty");
    for (int i = 0; i < 7; ++i)
        if (at(y_sizes, i) > 0 && at(y_sizes, i + 1) > 0 && at(y_sizes, i + 2) > 0)
            throw InfeasibleSpec(10, "axiom 10: one of Y[" + std::to_string(i) + "], Y[" +
                                         std::to_string(mod(i + 1, 7)) + "], Y[" + std::to_string(mod(i + 2, 7)) +
                                         "] must be empty");
    const bool sampled = profile == HeptagramProfile::custom;
    if (sampled && rng == nullptr)
        throw std::invalid_argument("the custom profile needs a random generator");

    const HeptagramLayout layout = lay_out(w_sizes, y_sizes);
    const auto& W = layout.witness.w;
    const auto& Y = layout.witness.y;
    auto build = [&] {
        GraphBuilder b(layout.n);
        const auto& p = custom;
        for (int i = 0; i < 7; ++i)
            for (int d : {1, 2}) {
                const int a = i;
                const int c = mod(i + d, 7);
                // Pairs the axioms only require to be linked.
                const bool loose = (a == 0 && c == 1) || (a == 1 && c == 2) || (a == 4 && c == 5) || (a == 0 && c == 2);
                connect(b, at(W, a), at(W, c), sampled && loose, p, rng);
            }
        for (int i = 0; i < 7; ++i) {
            const bool crowded = !at(Y, i - 1).empty() || !at(Y, i + 1).empty() || !at(Y, i - 3).empty() ||
                                 !at(Y, i + 3).empty();
            connect(b, at(Y, i), at(W, i), sampled, p, rng);
            connect(b, at(Y, i), at(W, i + 3), sampled && !crowded, p, rng);
            connect(b, at(Y, i), at(W, i - 3), sampled && !crowded, p, rng);
            connect(b, at(Y, i), at(Y, i + 1), false, p, rng);
        }
        return b.build();
    };

    if (!sampled)
        return {build(), layout.witness, 1};
    for (std::size_t attempt = 1; attempt <= custom.max_attempts; ++attempt) {
        Graph g = build();
        if (!verify_heptagram_type(g, layout.witness))
            continue;
        if (find_odd_hole(g).status != SearchStatus::absent || find_full_house(g))
            continue;
        return {std::move(g), layout.witness, attempt};
    }
    throw std::runtime_error("custom heptagram profile accepted no sample in " + std::to_string(custom.max_attempts) +
                             " attempts");
}

namespace {

template <std::size_t K>
std::vector<std::size_t> sizes_under(const std::array<VertexSet, K>& parts, int shift, bool reflect)
{
    std::vector<std::size_t> out(K);
    for (int i = 0; i < static_cast<int>(K); ++i)
        out[static_cast<std::size_t>(mod((reflect ? -i : i) + shift, static_cast<int>(K)))] =
            parts[static_cast<std::size_t>(i)].size();
    return out;
}

} // namespace

std::vector<std::size_t> size_signature(const T11Witness& w)
{
    return sizes_under(canonicalize(w).w, 0, false);
}

std::vector<std::size_t> size_signature(const HeptagramTypeWitness& w)
{
    std::optional<std::vector<std::size_t>> best;
    for (int reflect = 0; reflect < 2; ++reflect)
        for (int shift = 0; shift < 7; ++shift) {
            auto s = sizes_under(w.w, shift, reflect == 1);
            auto ys = sizes_under(w.y, shift, reflect == 1);
            s.insert(s.end(), ys.begin(), ys.end());
            if (!best || s < *best)
                best = std::move(s);
        }
    return *best;
}

T11Witness canonicalize(const T11Witness& w)
{
    std::optional<std::vector<std::size_t>> best;
    T11Witness out = w;
    for (int reflect = 0; reflect < 2; ++reflect)
        for (int shift = 0; shift < 11; ++shift) {
            auto s = sizes_under(w.w, shift, reflect == 1);
            if (best && !(s < *best))
                continue;
            best = s;
            for (int i = 0; i < 11; ++i)
                out.w[static_cast<std::size_t>(mod((reflect == 1 ? -i : i) + shift, 11))] =
                    w.w[static_cast<std::size_t>(i)];
        }
    return out;
}

namespace {

bool complete_parts(const Graph& g, const HeptagramWitness& w, int i, int j)
{
    return is_complete_to(g, at(w.w, i), at(w.w, j));
}

PropertyCheck violated(std::string name, std::string detail)
{
    return PropertyCheck{std::move(name), false, std::move(detail)};
}

} // namespace

PropertyCheck check_complete_propagation(const Graph& g, const HeptagramWitness& w)
{
    const std::string name = "complete-propagation";
    for (int i = 0; i < 7; ++i) {
        if (!complete_parts(g, w, i, i + 1))
            continue;
        if (!complete_parts(g, w, i, i + 2))
            return violated(name, pair('W', i, 'W', i + 1, 7) + " complete but " + pair('W', i, 'W', i + 2, 7) + " not");
        if (!complete_parts(g, w, i - 1, i + 1))
            return violated(name,
                            pair('W', i, 'W', i + 1, 7) + " complete but " + pair('W', i - 1, 'W', i + 1, 7) + " not");
    }
    return {name, true, {}};
}

PropertyCheck check_alternating_completeness(const Graph& g, const HeptagramWitness& w)
{
    const std::string name = "alternating-completeness";
    for (int i = 0; i < 7; ++i)
        if (!complete_parts(g, w, i, i + 1) && !complete_parts(g, w, i + 2, i + 3))
            return violated(name, "neither " + pair('W', i, 'W', i + 1, 7) + " nor " + pair('W', i + 2, 'W', i + 3, 7) +
                                      " is complete");
    return {name, true, {}};
}

PropertyCheck check_common_path_index(const Graph& g, const HeptagramWitness& w)
{
    const std::string name = "common-path-index";
    std::optional<int> index;
    for (int t = 0; t < 7 && !index; ++t) {
        bool ok = true;
        for (int j = 0; j < 7 && ok; ++j)
            if (j != t)
                ok = complete_parts(g, w, j - 1, j + 1);
        for (int j : {t - 3, t - 2, t + 1, t + 2})
            ok = ok && complete_parts(g, w, j, j + 1);
        if (ok)
            index = t;
    }
    if (!index)
        return violated(name, "no index t with the required completeness pattern");
    for (int i = 0; i < 7; ++i)
        for (Vertex u : at(w.w, i - 2))
            for (Vertex v : at(w.w, i + 2)) {
                const VertexSet common = g.neighbors(u) & g.neighbors(v);
                for (int d : {-3, 0, 3})
                    if (!common.intersects(at(w.w, i + d)))
                        return violated(name, std::to_string(u) + " and " + std::to_string(v) +
                                                  " have no common neighbor in " + label('W', i + d, 7));
                bool linked = false;
                for (Vertex a : g.neighbors(u) & at(w.w, i - 1))
                    if ((g.neighbors(a) & g.neighbors(v)).intersects(at(w.w, i + 1))) {
                        linked = true;
                        break;
                    }
                if (!linked)
                    return violated(name, "no path " + std::to_string(u) + "-" + label('W', i - 1, 7) + "-" +
                                              label('W', i + 1, 7) + "-" + std::to_string(v));
            }
    return {name, true, "t = " + std::to_string(*index)};
}

PropertyCheck check_same_type_y_nonadjacent(const Graph& g, const HeptagramWitness& w, const VertexSet& outside)
{
    const std::string name = "same-type-y-nonadjacent";
    std::array<VertexSet, 7> by_type;
    by_type.fill(VertexSet(g.order()));
    for (Vertex v : outside)
        if (auto t = y_type(g, w, neighborhoods(g, w, v)))
            by_type[static_cast<std::size_t>(*t)].insert(v);
    for (int t = 0; t < 7; ++t)
        if (auto e = present_edge(g, by_type[static_cast<std::size_t>(t)], by_type[static_cast<std::size_t>(t)]))
            return violated(name, "Y-vertices " + std::to_string(e->first) + " and " + std::to_string(e->second) +
                                      " of type " + std::to_string(t) + " are adjacent");
    return {name, true, {}};
}

PropertyCheck check_consecutive_v_vertices(const Graph& g, const HeptagramWitness& w, const VertexSet& outside)
{
    const std::string name = "consecutive-v-adjacent";
    std::array<VertexSet, 7> v_of;
    v_of.fill(VertexSet(g.order()));
    for (const auto& tail : find_tails(g, w, outside))
        v_of[static_cast<std::size_t>(tail.type)].insert(tail.path.front());
    for (int i = 0; i < 7; ++i) {
        const VertexSet& a = at(v_of, i);
        const VertexSet& b = at(v_of, i + 1);
        if (a.empty() || b.empty())
            continue;
        if (auto e = missing_edge(g, a, b))
            return violated(name, "V-vertices " + std::to_string(e->first) + " (type " + std::to_string(i) + ") and " +
                                      std::to_string(e->second) + " are nonadjacent");
        if (auto e = missing_edge(g, a | b, at(w.w, i - 3)))
            return violated(name, "V-vertex " + std::to_string(e->first) + " is not complete to " +
                                      label('W', i - 3, 7));
    }
    return {name, true, {}};
}

std::vector<PropertyCheck> heptagram_property_suite(const Graph& g, const HeptagramWitness& w,
                                                    const VertexSet& outside)
{
    return {check_complete_propagation(g, w), check_alternating_completeness(g, w), check_common_path_index(g, w),
            check_same_type_y_nonadjacent(g, w, outside), check_consecutive_v_vertices(g, w, outside)};
}

} // namespace heptalab
