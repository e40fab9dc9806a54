#pragma once

#include "heptalab/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace heptalab {

enum class PatternKind { odd_hole, full_house, c7_complement, k4, custom };

std::string_view to_string(PatternKind kind) noexcept;

/// An induced copy of a named pattern. For odd holes the vertices are listed
/// in cycle order; for the other kinds vertices[i] is the image of pattern
/// vertex i (see named::full_house, named::c7_complement).
struct PatternHit {
    PatternKind kind = PatternKind::custom;
    std::vector<Vertex> vertices;
    /// Cycle length for odd holes, otherwise 0.
    std::size_t length = 0;
};

enum class SearchStatus { found, absent, inconclusive };

std::string_view to_string(SearchStatus status) noexcept;

struct DetectionResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<PatternHit> hit;
    std::uint64_t steps = 0;

    bool found() const noexcept { return status == SearchStatus::found; }
};

struct OddHoleOptions {
    /// Graphs up to this order are always searched to completion.
    std::size_t exact_order_limit = 24;
    /// Path-extension budget that applies above exact_order_limit.
    std::uint64_t node_budget = 50'000'000;
};

/// Shortest induced cycle of odd length >= 5.
DetectionResult find_odd_hole(const Graph& g, const OddHoleOptions& options = {});

enum class FullHouseMode {
    /// Enumerate K4s by clique extension and scan for a fifth vertex.
    clique_extension,
    /// Try every 5-subset; only allowed for n <= 12.
    all_subsets,
};

std::optional<PatternHit> find_full_house(const Graph& g, FullHouseMode mode = FullHouseMode::clique_extension);

std::optional<PatternHit> find_k4(const Graph& g);

struct PatternSearchOptions {
    /// Largest pattern order accepted.
    std::size_t pattern_cap = 12;
};

/// One induced embedding of `pattern` into `g`: result->vertices[i] is the host
/// image of pattern vertex i. Throws std::invalid_argument if the pattern has
/// more vertices than the host or than options.pattern_cap.
std::optional<PatternHit> find_induced_pattern(const Graph& g, const Graph& pattern,
                                               const PatternSearchOptions& options = {});

/// Calls `visit` with every induced embedding (as a pattern-indexed vertex
/// list) until it returns false. Same preconditions as find_induced_pattern.
void for_each_induced_embedding(const Graph& g, const Graph& pattern,
                                const std::function<bool(const std::vector<Vertex>&)>& visit,
                                const PatternSearchOptions& options = {});

std::optional<PatternHit> find_c7_complement(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

/// Re-checks that hit.vertices induce the pattern its kind names. Custom
/// hits need the pattern they were found against.
bool verify_hit(const Graph& g, const PatternHit& hit, const Graph* custom_pattern = nullptr);

struct CliqueResult {
    std::size_t omega = 0;
    VertexSet witness;
};

/// Exact clique number by branch and bound with greedy-coloring bounds.
CliqueResult clique_number(const Graph& g);

/// chi(H) == omega(H) for every induced subgraph H. Exhaustive over vertex
/// subsets; throws std::invalid_argument above 12 vertices.
bool is_perfect_bruteforce(const Graph& g);

} // namespace heptalab
