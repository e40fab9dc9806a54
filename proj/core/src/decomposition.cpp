#include "heptalab/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace heptalab {

std::string_view to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

struct BudgetExceeded {};

class StepBudget {
public:
    explicit StepBudget(std::uint64_t limit) : limit_(limit) {}
    void tick()
    {
        if (++used_ > limit_)
            throw BudgetExceeded{};
    }
    std::uint64_t used() const noexcept { return std::min(used_, limit_); }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

using PathVisitor = std::function<bool(const std::vector<Vertex>&)>;

// Enumerates induced paths source .. b with interior inside `interior` and b
// in `targets`, including the single edge when source ~ b. The visitor
// returns false to stop; walk() then returns false too.
class InducedPathWalker {
public:
    InducedPathWalker(const Graph& g, StepBudget& budget) : g_(g), budget_(budget) {}

    bool walk(Vertex source, const VertexSet& interior, const VertexSet& targets, const PathVisitor& visit)
    {
        path_.assign(1, source);
        for (Vertex b : g_.neighbors(source) & targets) {
            budget_.tick();
            path_.push_back(b);
            bool go_on = visit(path_);
            path_.pop_back();
            if (!go_on)
                return false;
        }
        VertexSet inner = g_.neighbors(source);
        inner.insert(source);
        for (Vertex first : g_.neighbors(source) & interior) {
            budget_.tick();
            path_.push_back(first);
            bool go_on = extend(inner, interior, targets, visit);
            path_.pop_back();
            if (!go_on)
                return false;
        }
        return true;
    }

private:
    // `inner`: closed neighborhoods of every path vertex except the head.
    bool extend(const VertexSet& inner, const VertexSet& interior, const VertexSet& targets, const PathVisitor& visit)
    {
        const Vertex head = path_.back();
        VertexSet ends = (g_.neighbors(head) & targets) - inner;
        for (Vertex b : ends) {
            budget_.tick();
            path_.push_back(b);
            bool go_on = visit(path_);
            path_.pop_back();
            if (!go_on)
                return false;
        }
        VertexSet next = (g_.neighbors(head) & interior) - inner;
        if (next.empty())
            return true;
        VertexSet next_inner = inner | g_.neighbors(head);
        next_inner.insert(head);
        for (Vertex c : next) {
            budget_.tick();
            path_.push_back(c);
            bool go_on = extend(next_inner, interior, targets, visit);
            path_.pop_back();
            if (!go_on)
                return false;
        }
        return true;
    }

    const Graph& g_;
    StepBudget& budget_;
    std::vector<Vertex> path_;
};

void check_structure(const Graph& g, const HarmoniousPartition& p)
{
    const std::size_t n = g.order();
    auto same_universe = [n](const VertexSet& s) { return s.universe() == n; };
    if (!same_universe(p.cutset) || !same_universe(p.sides[0]) || !same_universe(p.sides[1]) ||
        !std::ranges::all_of(p.parts, same_universe))
        throw MalformedPartition("partition sets do not match the graph order");
    if (p.parts.empty())
        throw MalformedPartition("a harmonious partition needs at least one part");
    VertexSet covered(n);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i].empty())
            throw MalformedPartition("part " + std::to_string(i + 1) + " is empty");
        if (p.parts[i].intersects(covered))
            throw MalformedPartition("part " + std::to_string(i + 1) + " overlaps an earlier part");
        covered |= p.parts[i];
    }
    if (covered != p.cutset)
        throw MalformedPartition("parts do not cover exactly the cutset");
    for (int s = 0; s < 2; ++s) {
        if (p.sides[s].empty())
            throw MalformedPartition("side " + std::to_string(s + 1) + " is empty");
        if (p.sides[s].intersects(p.cutset))
            throw MalformedPartition("side " + std::to_string(s + 1) + " meets the cutset");
    }
    if (p.sides[0].intersects(p.sides[1]))
        throw MalformedPartition("the two sides overlap");
    if ((p.sides[0] | p.sides[1] | p.cutset) != g.vertices())
        throw MalformedPartition("cutset and sides do not cover every vertex");
    for (Vertex v : p.sides[0])
        if (g.neighbors(v).intersects(p.sides[1]))
            throw MalformedPartition("edge " + std::to_string(v) + "-" +
                                     std::to_string(*(g.neighbors(v) & p.sides[1]).first()) +
                                     " joins the two sides");
}

std::vector<int> part_index(const Graph& g, const std::vector<VertexSet>& parts)
{
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (Vertex v : parts[i])
            index[v] = static_cast<int>(i);
    return index;
}

// Stability and pairwise completeness; the cheap necessary conditions.
std::optional<HarmoniousCheck> check_parts(const Graph& g, const std::vector<VertexSet>& parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (Vertex v : parts[i]) {
            VertexSet clash = g.neighbors(v) & parts[i];
            if (!clash.empty())
                return HarmoniousCheck{Verdict::no,
                                       {v, *clash.first()},
                                       "part " + std::to_string(i + 1) + " is not stable: odd path of length 1",
                                       0};
        }
    }
    if (parts.size() >= 3) {
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                for (Vertex v : parts[i]) {
                    VertexSet missing = parts[j] - g.neighbors(v);
                    if (!missing.empty())
                        return HarmoniousCheck{Verdict::no,
                                               {v, *missing.first()},
                                               "parts " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                   " are not complete to each other",
                                               0};
                }
    }
    return std::nullopt;
}

} // namespace

HarmoniousCheck verify_harmonious(const Graph& g, const HarmoniousPartition& p, const HarmoniousOptions& options)
{
    check_structure(g, p);
    if (auto bad = check_parts(g, p.parts))
        return *bad;

    const auto part = part_index(g, p.parts);
    StepBudget budget(options.budget);
    InducedPathWalker walker(g, budget);
    HarmoniousCheck result;

    auto check_path = [&](const std::vector<Vertex>& path) {
        const Vertex a = path.front();
        const Vertex b = path.back();
        const bool even = (path.size() - 1) % 2 == 0;
        const bool same = part[a] == part[b];
        if (even == same)
            return true;
        result.verdict = Verdict::no;
        result.counterexample = path;
        result.reason = std::string(even ? "even" : "odd") + " induced path between " +
                        (same ? "the same part " : "parts ") + std::to_string(part[a] + 1) +
                        (same ? "" : " and " + std::to_string(part[b] + 1));
        return false;
    };

    try {
        for (Vertex a : p.cutset) {
            VertexSet later(g.order());
            for (Vertex b : p.cutset)
                if (b > a)
                    later.insert(b);
            if (options.interior == PathInterior::avoid_cutset) {
                if (!walker.walk(a, g.vertices() - p.cutset, later, check_path))
                    break;
            } else {
                bool stopped = false;
                for (const auto& target_part : p.parts) {
                    VertexSet interior = g.vertices() - p.parts[static_cast<std::size_t>(part[a])] - target_part;
                    if (!walker.walk(a, interior, later & target_part, check_path)) {
                        stopped = true;
                        break;
                    }
                }
                if (stopped)
                    break;
            }
        }
    } catch (const BudgetExceeded&) {
        result.verdict = Verdict::inconclusive;
        result.reason = "path budget exhausted";
    }
    result.steps = budget.used();
    return result;
}

std::vector<VertexSet> minimal_separators(const Graph& g)
{
    const VertexSet all = g.vertices();
    std::set<VertexSet> found;
    std::vector<VertexSet> queue;

    auto collect = [&](const VertexSet& removed) {
        for (const auto& c : components(g, all - removed)) {
            VertexSet sep = neighborhood_of(g, c, all - c);
            if (!sep.empty() && found.insert(sep).second)
                queue.push_back(sep);
        }
    };

    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet closed = g.neighbors(v);
        closed.insert(v);
        collect(closed);
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const VertexSet sep = queue[i];
        for (Vertex x : sep)
            collect(sep | g.neighbors(x));
    }
    return {found.begin(), found.end()};
}

namespace {

// Parity masks of induced paths between cutset vertices whose interior avoids
// the cutset: bit 0 = some even path, bit 1 = some odd path.
using ParityTable = std::map<std::pair<Vertex, Vertex>, unsigned>;

ParityTable path_parities(const Graph& g, const VertexSet& cutset, InducedPathWalker& walker)
{
    ParityTable table;
    for (Vertex a : cutset) {
        VertexSet later(g.order());
        for (Vertex b : cutset)
            if (b > a)
                later.insert(b);
        walker.walk(a, g.vertices() - cutset, later, [&](const std::vector<Vertex>& path) {
            table[{path.front(), path.back()}] |= (path.size() - 1) % 2 == 0 ? 1U : 2U;
            return true;
        });
    }
    return table;
}

unsigned parity_of(const ParityTable& t, Vertex a, Vertex b)
{
    auto it = t.find({std::min(a, b), std::max(a, b)});
    return it == t.end() ? 0U : it->second;
}

// At most two parts: a two-coloring problem with "same" and "different"
// constraints read off the parity table.
std::optional<std::vector<VertexSet>> split_in_two(const Graph& g, const VertexSet& cutset, const ParityTable& t)
{
    const auto members = cutset.to_vector();
    std::map<Vertex, int> side;
    for (Vertex root : members) {
        if (side.contains(root))
            continue;
        side[root] = 0;
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            Vertex a = stack.back();
            stack.pop_back();
            for (Vertex b : members) {
                if (b == a)
                    continue;
                unsigned mask = g.adjacent(a, b) ? 2U : parity_of(t, a, b);
                if (mask == 0)
                    continue;
                if (mask == 3)
                    return std::nullopt;
                int want = mask == 1 ? side[a] : 1 - side[a];
                auto it = side.find(b);
                if (it == side.end()) {
                    side[b] = want;
                    stack.push_back(b);
                } else if (it->second != want) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<VertexSet> parts(2, VertexSet(g.order()));
    for (auto [v, s] : side)
        parts[static_cast<std::size_t>(s)].insert(v);
    if (parts[1].empty())
        parts.pop_back();
    return parts;
}

// Three or more pairwise complete stable parts are forced: they are the
// components of the complement of g[cutset].
std::optional<std::vector<VertexSet>> split_complete(const Graph& g, const VertexSet& cutset, const ParityTable& t)
{
    std::vector<VertexSet> parts;
    VertexSet rest = cutset;
    while (auto v = rest.first()) {
        VertexSet comp(g.order());
        comp.insert(*v);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet grown(g.order());
            for (Vertex u : frontier)
                grown |= (cutset - g.neighbors(u));
            grown -= comp;
            comp |= grown;
            frontier = grown;
        }
        parts.push_back(comp);
        rest -= comp;
    }
    if (parts.size() < 3)
        return std::nullopt;
    for (const auto& part : parts) {
        if (!is_stable_set(g, part))
            return std::nullopt;
        for (Vertex a : part)
            for (Vertex b : part)
                if (a < b && (parity_of(t, a, b) & 2U) != 0)
                    return std::nullopt;
    }
    return parts;
}

} // namespace

CutsetSearchResult find_harmonious_cutset(const Graph& g, const CutsetSearchOptions& options)
{
    if (!is_connected(g))
        throw std::invalid_argument("find_harmonious_cutset requires a connected graph");
    const std::size_t n = g.order();
    const VertexSet all = g.vertices();

    auto is_cutset = [&](const VertexSet& x) {
        return x.size() + 2 <= n && components(g, all - x).size() >= 2;
    };

    std::vector<VertexSet> candidates;
    if (n <= options.exhaustive_order_limit) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            VertexSet x = VertexSet::from_mask(n, mask);
            if (is_cutset(x))
                candidates.push_back(std::move(x));
        }
    } else if (n <= options.separator_order_limit) {
        candidates = minimal_separators(g);
    } else {
        std::vector<Vertex> pick;
        std::function<void(Vertex)> grow = [&](Vertex from) {
            if (!pick.empty()) {
                VertexSet x = VertexSet::from_range(n, pick);
                if (is_cutset(x))
                    candidates.push_back(std::move(x));
            }
            if (pick.size() == options.max_cutset)
                return;
            for (Vertex v = from; v < n; ++v) {
                pick.push_back(v);
                grow(v + 1);
                pick.pop_back();
            }
        };
        grow(0);
    }
    std::ranges::stable_sort(candidates, [](const VertexSet& a, const VertexSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    CutsetSearchResult result;
    StepBudget budget(options.budget);
    InducedPathWalker walker(g, budget);
    bool exhausted = false;
    for (const auto& x : candidates) {
        ++result.candidates_examined;
        ParityTable table;
        try {
            table = path_parities(g, x, walker);
        } catch (const BudgetExceeded&) {
            exhausted = true;
            break;
        }
        std::vector<std::vector<VertexSet>> splits;
        if (auto two = split_in_two(g, x, table))
            splits.push_back(std::move(*two));
        if (auto many = split_complete(g, x, table))
            splits.push_back(std::move(*many));
        for (auto& parts : splits) {
            HarmoniousPartition p;
            p.cutset = x;
            p.parts = std::move(parts);
            auto comps = components(g, all - x);
            p.sides[0] = comps.front();
            p.sides[1] = all - x - comps.front();
            HarmoniousOptions fresh{options.budget, options.interior};
            auto check = verify_harmonious(g, p, fresh);
            if (check.verdict == Verdict::yes) {
                result.status = SearchStatus::found;
                result.partition = std::move(p);
                result.steps = budget.used();
                return result;
            }
        }
    }
    result.status = exhausted ? SearchStatus::inconclusive : SearchStatus::absent;
    result.steps = budget.used();
    return result;
}

InducedSubgraph side_graph(const Graph& g, const HarmoniousPartition& p, int side)
{
    if (side != 0 && side != 1)
        throw std::invalid_argument("side must be 0 or 1");
    return induced_subgraph(g, p.sides[static_cast<std::size_t>(side)] | p.cutset);
}

namespace {

// Recolors one side until every cutset vertex in part j carries color j.
std::vector<int> make_compliant(const InducedSubgraph& side, const std::vector<int>& parent_part, std::vector<int> color,
                                int k, std::size_t cutset_size, std::vector<std::size_t>* counts)
{
    const Graph& h = side.graph;
    auto part_of = [&](Vertex child) { return parent_part[side.to_parent[child]]; };
    auto compliant = [&] {
        std::size_t c = 0;
        for (Vertex v = 0; v < h.order(); ++v)
            if (part_of(v) >= 0 && color[v] == part_of(v))
                ++c;
        return c;
    };

    std::size_t current = compliant();
    if (counts)
        counts->push_back(current);
    const std::size_t cap = cutset_size * static_cast<std::size_t>(k);
    for (std::size_t iteration = 0; current < cutset_size; ++iteration) {
        if (iteration >= cap)
            throw PreconditionViolation("compliance recoloring did not converge; cutset is not harmonious");
        Vertex x = h.order();
        for (Vertex v = 0; v < h.order(); ++v)
            if (part_of(v) >= 0 && color[v] != part_of(v)) {
                x = v;
                break;
            }
        const int want = part_of(x);
        const int have = color[x];
        VertexSet two_colored(h.order());
        for (Vertex v = 0; v < h.order(); ++v)
            if (color[v] == want || color[v] == have)
                two_colored.insert(v);
        for (Vertex v : component_of(h, two_colored, x))
            color[v] = color[v] == want ? have : want;
        const std::size_t next = compliant();
        if (counts)
            counts->push_back(next);
        if (next <= current)
            throw PreconditionViolation("two-color swap at vertex " + std::to_string(side.to_parent[x]) +
                                        " did not increase the compliant count; cutset is not harmonious");
        current = next;
    }
    return color;
}

} // namespace

Coloring merge_colorings(const Graph& g, const HarmoniousPartition& p, const Coloring& side0, const Coloring& side1,
                         MergeTrace* trace)
{
    check_structure(g, p);
    const int k = std::max(side0.k, side1.k);
    if (p.parts.size() > static_cast<std::size_t>(k))
        throw std::invalid_argument("merge needs at least as many colors as cutset parts");

    const auto part = part_index(g, p.parts);
    std::array<const Coloring*, 2> input{&side0, &side1};
    Coloring merged{std::vector<int>(g.order(), -1), k};
    for (int s = 0; s < 2; ++s) {
        auto side = side_graph(g, p, s);
        Coloring widened{input[static_cast<std::size_t>(s)]->color, k};
        if (!is_proper(side.graph, widened))
            throw std::invalid_argument("side " + std::to_string(s + 1) + " coloring is not proper");
        auto* counts = trace ? &trace->compliant_counts[static_cast<std::size_t>(s)] : nullptr;
        auto color = make_compliant(side, part, widened.color, k, p.cutset.size(), counts);
        for (Vertex v = 0; v < side.graph.order(); ++v)
            merged.color[side.to_parent[v]] = color[v];
    }
    if (trace)
        trace->swaps = trace->compliant_counts[0].size() + trace->compliant_counts[1].size() - 2;
    if (!is_proper(g, merged))
        throw PreconditionViolation("merged coloring is not proper");
    return merged;
}

} // namespace heptalab
