#include "heptalab/detectors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace heptalab {

std::string_view to_string(PatternKind kind) noexcept
{
    switch (kind) {
    case PatternKind::odd_hole: return "odd_hole";
    case PatternKind::full_house: return "full_house";
    case PatternKind::c7_complement: return "c7_complement";
    case PatternKind::k4: return "k4";
    case PatternKind::custom: return "custom";
    }
    return "unknown";
}

std::string_view to_string(SearchStatus status) noexcept
{
    switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Odd holes

namespace {

struct BudgetExceeded {};

class OddHoleSearch {
public:
    OddHoleSearch(const Graph& g, const OddHoleOptions& options)
        : g_(g), enforce_budget_(g.order() > options.exact_order_limit), budget_(options.node_budget)
    {
    }

    std::uint64_t steps() const noexcept { return steps_; }

    /// Induced cycle of exactly `length` vertices whose smallest vertex is
    /// `start`, or empty.
    std::vector<Vertex> find(std::size_t length, Vertex start)
    {
        length_ = length;
        path_.assign(1, start);
        VertexSet above(g_.order());
        for (Vertex v = start + 1; v < g_.order(); ++v)
            above.insert(v);
        above_ = above;
        closed_start_ = g_.neighbors(start);
        closed_start_.insert(start);
        VertexSet inner(g_.order());
        for (Vertex v1 : g_.neighbors(start) & above_) {
            tick();
            path_.push_back(v1);
            if (extend(inner))
                return path_;
            path_.pop_back();
        }
        return {};
    }

private:
    void tick()
    {
        ++steps_;
        if (enforce_budget_ && steps_ > budget_)
            throw BudgetExceeded{};
    }

    // `inner` is the union of closed neighborhoods of path_[1 .. k-2], where
    // k = path_.size(); the head path_[k-1] is excluded.
    bool extend(const VertexSet& inner)
    {
        const std::size_t k = path_.size();
        const Vertex head = path_.back();
        VertexSet candidates = g_.neighbors(head) & above_;
        candidates -= inner;
        if (k + 1 == length_) {
            candidates &= g_.neighbors(path_[0]);
            for (Vertex c : candidates) {
                tick();
                if (c > path_[1] && c != head) {
                    path_.push_back(c);
                    return true;
                }
            }
            return false;
        }
        candidates -= closed_start_;
        // Once c is appended the head becomes an interior vertex.
        VertexSet next_inner = inner | g_.neighbors(head);
        next_inner.insert(head);
        for (Vertex c : candidates) {
            tick();
            path_.push_back(c);
            if (extend(next_inner))
                return true;
            path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    bool enforce_budget_;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
    std::size_t length_ = 0;
    std::vector<Vertex> path_;
    VertexSet above_;
    VertexSet closed_start_;
};

} // namespace

DetectionResult find_odd_hole(const Graph& g, const OddHoleOptions& options)
{
    DetectionResult result;
    OddHoleSearch search(g, options);
    try {
        for (std::size_t length = 5; length <= g.order(); length += 2) {
            for (Vertex start = 0; start + length <= g.order(); ++start) {
                auto cycle = search.find(length, start);
                if (!cycle.empty()) {
                    result.status = SearchStatus::found;
                    result.hit = PatternHit{PatternKind::odd_hole, std::move(cycle), length};
                    result.steps = search.steps();
                    return result;
                }
            }
        }
        result.status = SearchStatus::absent;
    } catch (const BudgetExceeded&) {
        result.status = SearchStatus::inconclusive;
    }
    result.steps = search.steps();
    return result;
}

// ---------------------------------------------------------------------------
// Full houses and K4

namespace {

template <class Visit>
bool for_each_k4(const Graph& g, Visit&& visit)
{
    const std::size_t n = g.order();
    for (Vertex a = 0; a < n; ++a) {
        VertexSet na(n);
        for (Vertex v : g.neighbors(a))
            if (v > a)
                na.insert(v);
        for (Vertex b : na) {
            VertexSet nab = na & g.neighbors(b);
            for (Vertex c : nab) {
                if (c <= b)
                    continue;
                VertexSet nabc = nab & g.neighbors(c);
                for (Vertex d : nabc)
                    if (d > c && visit(std::array<Vertex, 4>{a, b, c, d}))
                        return true;
            }
        }
    }
    return false;
}

std::optional<PatternHit> full_house_by_cliques(const Graph& g)
{
    std::optional<PatternHit> hit;
    for_each_k4(g, [&](const std::array<Vertex, 4>& k) {
        VertexSet clique(g.order(), {k[0], k[1], k[2], k[3]});
        for (Vertex v = 0; v < g.order(); ++v) {
            if (clique.contains(v))
                continue;
            VertexSet touched = g.neighbors(v) & clique;
            if (touched.size() != 2)
                continue;
            VertexSet rest = clique - touched;
            auto t = touched.to_vector();
            auto r = rest.to_vector();
            hit = PatternHit{PatternKind::full_house, {t[0], t[1], r[0], r[1], v}, 0};
            return true;
        }
        return false;
    });
    return hit;
}

std::optional<PatternHit> full_house_by_subsets(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > 12)
        throw std::invalid_argument("all-subsets full house search is limited to 12 vertices");
    if (n < 5)
        return std::nullopt;
    const Graph pattern = named::full_house();
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + 5, true);
    do {
        VertexSet s(n);
        for (Vertex v = 0; v < n; ++v)
            if (pick[v])
                s.insert(v);
        auto sub = induced_subgraph(g, s);
        if (sub.graph.size() == 8) {
            if (auto emb = find_induced_pattern(sub.graph, pattern)) {
                PatternHit hit{PatternKind::full_house, {}, 0};
                for (Vertex v : emb->vertices)
                    hit.vertices.push_back(sub.to_parent[v]);
                return hit;
            }
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return std::nullopt;
}

} // namespace

std::optional<PatternHit> find_full_house(const Graph& g, FullHouseMode mode)
{
    return mode == FullHouseMode::clique_extension ? full_house_by_cliques(g) : full_house_by_subsets(g);
}

std::optional<PatternHit> find_k4(const Graph& g)
{
    std::optional<PatternHit> hit;
    for_each_k4(g, [&](const std::array<Vertex, 4>& k) {
        hit = PatternHit{PatternKind::k4, {k.begin(), k.end()}, 0};
        return true;
    });
    return hit;
}

// ---------------------------------------------------------------------------
// Induced pattern embedding

namespace {

std::vector<std::size_t> sorted_degrees(const Graph& g)
{
    std::vector<std::size_t> d(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        d[v] = g.degree(v);
    std::ranges::sort(d, std::greater<>());
    return d;
}

// Necessary condition: the i-th largest pattern degree cannot exceed the
// i-th largest host degree.
bool degrees_fit(const Graph& host, const Graph& pattern)
{
    auto h = sorted_degrees(host);
    auto p = sorted_degrees(pattern);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] > h[i])
            return false;
    return true;
}

// Per-vertex (degree, sorted neighbor degrees), sorted. Equal for isomorphic
// graphs.
std::vector<std::vector<std::size_t>> fingerprint(const Graph& g)
{
    std::vector<std::vector<std::size_t>> out;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<std::size_t> row{g.degree(v)};
        std::vector<std::size_t> nd;
        for (Vertex w : g.neighbors(v))
            nd.push_back(g.degree(w));
        std::ranges::sort(nd);
        row.insert(row.end(), nd.begin(), nd.end());
        out.push_back(std::move(row));
    }
    std::ranges::sort(out);
    return out;
}

class EmbeddingSearch {
public:
    EmbeddingSearch(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern)
    {
        order_pattern();
    }

    void run(const std::function<bool(const std::vector<Vertex>&)>& visit)
    {
        visit_ = &visit;
        image_.assign(pattern_.order(), 0);
        if (pattern_.order() == 0) {
            visit(image_);
            return;
        }
        recurse(0, VertexSet(host_.order()));
    }

private:
    // Pattern vertices ordered so that each has as many earlier neighbors as
    // possible, starting from a maximum-degree vertex.
    void order_pattern()
    {
        const std::size_t k = pattern_.order();
        std::vector<bool> placed(k, false);
        std::vector<std::size_t> links(k, 0);
        for (std::size_t step = 0; step < k; ++step) {
            std::size_t best = k;
            for (Vertex p = 0; p < k; ++p) {
                if (placed[p])
                    continue;
                if (best == k || links[p] > links[best] ||
                    (links[p] == links[best] && pattern_.degree(p) > pattern_.degree(best)))
                    best = p;
            }
            placed[best] = true;
            order_.push_back(best);
            for (Vertex q : pattern_.neighbors(best))
                ++links[q];
        }
    }

    bool recurse(std::size_t depth, const VertexSet& used)
    {
        if (depth == order_.size())
            return !(*visit_)(image_);
        const Vertex p = order_[depth];
        VertexSet candidates = host_.vertices() - used;
        for (std::size_t i = 0; i < depth; ++i) {
            const Vertex q = order_[i];
            if (pattern_.adjacent(p, q))
                candidates &= host_.neighbors(image_[q]);
            else
                candidates -= host_.neighbors(image_[q]);
        }
        const std::size_t need = pattern_.degree(p);
        for (Vertex h : candidates) {
            if (host_.degree(h) < need)
                continue;
            image_[p] = h;
            VertexSet next = used;
            next.insert(h);
            if (recurse(depth + 1, next))
                return true;
        }
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    std::vector<Vertex> order_;
    std::vector<Vertex> image_;
    const std::function<bool(const std::vector<Vertex>&)>* visit_ = nullptr;
};

void check_pattern_size(const Graph& g, const Graph& pattern, const PatternSearchOptions& options)
{
    if (pattern.order() > options.pattern_cap)
        throw std::invalid_argument("pattern has " + std::to_string(pattern.order()) +
                                    " vertices, above the cap of " + std::to_string(options.pattern_cap));
    if (pattern.order() > g.order())
        throw std::invalid_argument("pattern has more vertices than the host graph");
}

} // namespace

void for_each_induced_embedding(const Graph& g, const Graph& pattern,
                                const std::function<bool(const std::vector<Vertex>&)>& visit,
                                const PatternSearchOptions& options)
{
    check_pattern_size(g, pattern, options);
    if (!degrees_fit(g, pattern))
        return;
    EmbeddingSearch(g, pattern).run(visit);
}

std::optional<PatternHit> find_induced_pattern(const Graph& g, const Graph& pattern,
                                               const PatternSearchOptions& options)
{
    std::optional<PatternHit> hit;
    for_each_induced_embedding(
        g, pattern,
        [&](const std::vector<Vertex>& image) {
            hit = PatternHit{PatternKind::custom, image, 0};
            return false;
        },
        options);
    return hit;
}

std::optional<PatternHit> find_c7_complement(const Graph& g)
{
    if (g.order() < 7)
        return std::nullopt;
    static const Graph pattern = named::c7_complement();
    auto hit = find_induced_pattern(g, pattern);
    if (hit)
        hit->kind = PatternKind::c7_complement;
    return hit;
}

bool is_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    if (fingerprint(a) != fingerprint(b))
        return false;
    bool found = false;
    EmbeddingSearch(a, b).run([&](const std::vector<Vertex>&) {
        found = true;
        return false;
    });
    return found;
}

bool verify_hit(const Graph& g, const PatternHit& hit, const Graph* custom_pattern)
{
    const auto& vs = hit.vertices;
    for (Vertex v : vs)
        if (v >= g.order())
            return false;
    VertexSet set = VertexSet::from_range(g.order(), vs);
    if (set.size() != vs.size())
        return false;

    // Labeled check: vs[i] ~ vs[j] exactly when pattern i ~ j.
    auto matches = [&](const Graph& pattern) {
        if (pattern.order() != vs.size())
            return false;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (g.adjacent(vs[i], vs[j]) != pattern.adjacent(i, j))
                    return false;
        return true;
    };

    switch (hit.kind) {
    case PatternKind::odd_hole:
        return vs.size() >= 5 && vs.size() % 2 == 1 && hit.length == vs.size() && matches(named::cycle(vs.size()));
    case PatternKind::full_house:
        return matches(named::full_house());
    case PatternKind::c7_complement:
        return matches(named::c7_complement());
    case PatternKind::k4:
        return matches(named::complete(4));
    case PatternKind::custom:
        return custom_pattern != nullptr && matches(*custom_pattern);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Clique number

namespace {

class MaxClique {
public:
    explicit MaxClique(const Graph& g) : g_(g), best_(g.order()), current_(g.order()) {}

    CliqueResult run()
    {
        expand(g_.vertices());
        return {best_size_, best_};
    }

private:
    // Greedy sequential coloring of `p`; returns vertices in color order with
    // their color numbers (1-based), which bound the clique size reachable.
    void color_sort(const VertexSet& p, std::vector<Vertex>& order, std::vector<std::size_t>& bounds) const
    {
        VertexSet uncolored = p;
        std::size_t color = 0;
        while (!uncolored.empty()) {
            ++color;
            VertexSet available = uncolored;
            while (auto v = available.first()) {
                available.erase(*v);
                available -= g_.neighbors(*v);
                uncolored.erase(*v);
                order.push_back(*v);
                bounds.push_back(color);
            }
        }
    }

    void expand(VertexSet p)
    {
        std::vector<Vertex> order;
        std::vector<std::size_t> bounds;
        color_sort(p, order, bounds);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_size_ + bounds[i] <= best_size_)
                return;
            const Vertex v = order[i];
            current_.insert(v);
            ++current_size_;
            VertexSet next = p & g_.neighbors(v);
            if (next.empty()) {
                if (current_size_ > best_size_) {
                    best_size_ = current_size_;
                    best_ = current_;
                }
            } else {
                expand(std::move(next));
            }
            current_.erase(v);
            --current_size_;
            p.erase(v);
        }
    }

    const Graph& g_;
    VertexSet best_;
    std::size_t best_size_ = 0;
    VertexSet current_;
    std::size_t current_size_ = 0;
};

} // namespace

CliqueResult clique_number(const Graph& g)
{
    return MaxClique(g).run();
}

// ---------------------------------------------------------------------------
// Perfection

bool is_perfect_bruteforce(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > 12)
        throw std::invalid_argument("brute-force perfection check is limited to 12 vertices");
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<std::uint32_t> adj(n);
    for (Vertex v = 0; v < n; ++v)
        adj[v] = static_cast<std::uint32_t>(g.neighbors(v).mask());

    std::vector<bool> stable(subsets, true);
    std::vector<std::uint8_t> omega(subsets, 0);
    std::vector<std::uint8_t> chi(subsets, 0);
    for (std::uint32_t s = 1; s < subsets; ++s) {
        const auto v = static_cast<unsigned>(std::countr_zero(s));
        const std::uint32_t rest = s & (s - 1);
        stable[s] = stable[rest] && (adj[v] & rest) == 0;
        omega[s] = std::max<std::uint8_t>(omega[rest], static_cast<std::uint8_t>(1 + omega[rest & adj[v]]));
        // Some color class contains v; try every stable class through v.
        std::uint8_t best = 255;
        const std::uint32_t others = rest & ~adj[v];
        for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
            const std::uint32_t cls = sub | (1U << v);
            if (stable[cls])
                best = std::min<std::uint8_t>(best, static_cast<std::uint8_t>(1 + chi[s & ~cls]));
            if (sub == 0)
                break;
        }
        chi[s] = best;
        if (chi[s] != omega[s])
            return false;
    }
    return true;
}

} // namespace heptalab
