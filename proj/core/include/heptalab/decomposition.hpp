#pragma once

#include "heptalab/coloring.hpp"
#include "heptalab/detectors.hpp"
#include "heptalab/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace heptalab {

/// A cutset X split into stable parts X_1..X_k, with the vertices outside X
/// split into two nonempty sides that have no edges between them.
struct HarmoniousPartition {
    VertexSet cutset;
    std::vector<VertexSet> parts;
    std::array<VertexSet, 2> sides;
};

/// Which vertices an X_iX_j-path may use in its interior.
enum class PathInterior {
    /// Interior avoids the whole cutset.
    avoid_cutset,
    /// Interior avoids only X_i and X_j, the literal reading of an
    /// X_iX_j-path.
    avoid_endpoint_parts,
};

/// Raised when a partition is not structurally well formed (overlapping or
/// empty parts, parts not covering the cutset, sides not separated).
class MalformedPartition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when merge_colorings cannot make progress, which means its
/// harmonious-cutset precondition does not hold.
class PreconditionViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Verdict { yes, no, inconclusive };

std::string_view to_string(Verdict v) noexcept;

struct HarmoniousCheck {
    Verdict verdict = Verdict::yes;
    /// For `no`: the offending induced path (or vertex pair), first to last.
    std::vector<Vertex> counterexample;
    std::string reason;
    std::uint64_t steps = 0;
};

struct HarmoniousOptions {
    /// Path-extension steps before the check gives up as inconclusive.
    std::uint64_t budget = 10'000'000;
    PathInterior interior = PathInterior::avoid_cutset;
};

/// Structural checks throw MalformedPartition; parity and completeness
/// failures are reported as Verdict::no with a counterexample.
HarmoniousCheck verify_harmonious(const Graph& g, const HarmoniousPartition& p, const HarmoniousOptions& options = {});

struct CutsetSearchOptions {
    /// Largest cutset tried when graphs are too big for the other strategies.
    std::size_t max_cutset = 4;
    /// Path-extension steps shared by the whole search.
    std::uint64_t budget = 10'000'000;
    /// Up to this order every vertex subset is a candidate.
    std::size_t exhaustive_order_limit = 12;
    /// Up to this order (and above the exhaustive limit) the minimal
    /// separators are the candidates.
    std::size_t separator_order_limit = 16;
    PathInterior interior = PathInterior::avoid_cutset;
};

struct CutsetSearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<HarmoniousPartition> partition;
    std::uint64_t steps = 0;
    std::size_t candidates_examined = 0;
};

/// First harmonious partition among the candidate cutsets, ordered by size and
/// then lexicographically. Every returned partition has passed
/// verify_harmonious with a fresh budget. Throws std::invalid_argument on
/// disconnected input.
CutsetSearchResult find_harmonious_cutset(const Graph& g, const CutsetSearchOptions& options = {});

/// All minimal vertex separators of a connected graph, sorted.
std::vector<VertexSet> minimal_separators(const Graph& g);

/// G_i = G[C_i + X] for side 0 or 1.
InducedSubgraph side_graph(const Graph& g, const HarmoniousPartition& p, int side);

/// Compliant-vertex counts observed by merge_colorings, per side, one entry
/// before the first swap and one after each swap.
struct MergeTrace {
    std::array<std::vector<std::size_t>, 2> compliant_counts;
    std::size_t swaps = 0;
};

/// Combines proper colorings of the two side graphs (indexed as returned by
/// side_graph) into a proper coloring of g. Each side is first recolored by
/// two-color component swaps until every x in part j has color j.
Coloring merge_colorings(const Graph& g, const HarmoniousPartition& p, const Coloring& side0, const Coloring& side1,
                         MergeTrace* trace = nullptr);

} // namespace heptalab
