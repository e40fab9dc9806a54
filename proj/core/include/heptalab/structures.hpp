#pragma once

#include "heptalab/graph.hpp"
#include "heptalab/random.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace heptalab {

// Part indices are 0-based throughout: W[0] is the first part. Index
// arithmetic is cyclic (mod 7 or mod 11).

/// Seven parts W[0..6]; need not cover the graph.
struct HeptagramWitness {
    std::array<VertexSet, 7> w;
};

/// W[0..6] nonempty, Y[0..6] possibly empty, together partitioning V(G).
struct HeptagramTypeWitness {
    std::array<VertexSet, 7> w;
    std::array<VertexSet, 7> y;
};

/// Eleven nonempty stable parts partitioning V(G).
struct T11Witness {
    std::array<VertexSet, 11> w;
};

/// Outcome of an axiom check. `axiom` is 1-based as in the definitions it
/// checks; 0 means the sets do not form a partition of the expected shape.
struct AxiomReport {
    bool holds = true;
    int axiom = 0;
    std::vector<Vertex> witness;
    std::string detail;

    explicit operator bool() const noexcept { return holds; }
};

/// Seven parts, anticomplete at cyclic distance 3, linked at distances 1 and
/// 2, plus the coherence conditions on consecutive triples and quadruples.
AxiomReport verify_heptagram(const Graph& g, const HeptagramWitness& w);

/// The ten heptagram-type axioms. Unlike the heptagram conditions these are
/// not invariant under rotating the indices: W[0], W[1], W[2] play a special
/// role.
AxiomReport verify_heptagram_type(const Graph& g, const HeptagramTypeWitness& w);

/// W[i] anticomplete to W[i+1], W[i+2] and complete to W[i+3], W[i+4], W[i+5].
AxiomReport verify_t11_type(const Graph& g, const T11Witness& w);

/// T11 recognition: seed from an induced 11-vertex core, assign the remaining
/// vertices by their required neighborhood pattern, then verify. Graphs of
/// order <= 14 fall back to exhaustive assignment when the greedy pass fails.
std::optional<T11Witness> recognize_t11_type(const Graph& g);

struct HeptagramRecognitionOptions {
    /// Distinct 7-antihole seeds tried before giving up.
    std::size_t max_seeds = 64;
    /// Up to this order an exhaustive assignment runs when the greedy pass fails.
    std::size_t exhaustive_order_limit = 12;
    /// Node budget of the exhaustive assignment.
    std::uint64_t exhaustive_budget = 5'000'000;
};

/// Heptagram-type recognition: grow a maximal heptagram from an induced
/// 7-antihole, require every other vertex to be a Y-vertex, then look for a
/// rotation or reflection of the indices under which all ten axioms hold.
std::optional<HeptagramTypeWitness> recognize_heptagram_type(const Graph& g,
                                                             const HeptagramRecognitionOptions& options = {});

/// Grows W greedily: vertices in ascending order, each placed into the first
/// part for which the result is still a heptagram, repeated to a fixpoint.
HeptagramWitness grow_heptagram(const Graph& g, HeptagramWitness w);

struct VertexClassification {
    enum class Kind { y_vertex, hat, tail_member, local, unclassifiable };

    Vertex vertex = 0;
    Kind kind = Kind::unclassifiable;
    /// Type t for y_vertex and hat.
    int type = -1;
    /// For hats: the neighborhoods in W[t-3], W[t+3] satisfy the tail
    /// conditions on the first vertex.
    bool tail_ready = false;
    /// For local: center i of the window W[i-1], W[i], W[i+1]; empty when v
    /// has no neighbor in W.
    std::optional<int> window;
    /// N(v) intersected with each part.
    std::array<VertexSet, 7> n;
};

std::string_view to_string(VertexClassification::Kind kind) noexcept;

/// Y-vertex, hat, tail member, local (neighbors within three consecutive
/// parts) or unclassifiable. Tail membership is judged against tails inside
/// V(G) minus W. Throws std::invalid_argument if v lies in W.
VertexClassification classify_vertex(const Graph& g, const HeptagramWitness& w, Vertex v);

struct Tail {
    std::vector<Vertex> path;
    int type = 0;
};

/// Every tail (of every type) whose vertices lie in `outside`, found by
/// extending induced paths from hat candidates. Single-vertex tails include
/// the Y-vertices. Throws std::invalid_argument if `outside` meets W.
std::vector<Tail> find_tails(const Graph& g, const HeptagramWitness& w, const VertexSet& outside,
                             std::size_t limit = 100'000);

/// Raised by the generators for unusable size vectors; names the axiom.
class InfeasibleSpec : public std::invalid_argument {
public:
    InfeasibleSpec(int axiom, const std::string& what) : std::invalid_argument(what), axiom_(axiom) {}
    int axiom() const noexcept { return axiom_; }

private:
    int axiom_;
};

struct GeneratedT11 {
    Graph graph;
    T11Witness witness;
};

/// Blow-up of the circulant on Z_11 with connection set {3, 4, 5}; part i
/// gets sizes[i] vertices, numbered consecutively.
GeneratedT11 generate_t11_type(const std::array<std::size_t, 11>& sizes);

enum class HeptagramProfile {
    /// Every pair that only has to be linked is made complete, and Y[i] is
    /// complete to W[i], W[i+3], W[i-3].
    all_complete,
    /// Random sub-linkages, kept only when all ten axioms hold and the graph
    /// has no odd hole and no full house.
    custom,
};

struct GeneratedHeptagramType {
    Graph graph;
    HeptagramTypeWitness witness;
    /// Samples drawn by the custom profile (1 for all_complete).
    std::size_t attempts = 1;
};

struct CustomProfileOptions {
    /// Chance that a pair allowed to be partial is sampled edge by edge
    /// rather than left complete.
    double partial_probability = 0.5;
    /// Probability of each optional edge in a sampled pair.
    double edge_probability = 0.7;
    std::size_t max_attempts = 20'000;
};

/// Parts are numbered W[0], ..., W[6], Y[0], ..., Y[6] in that order. Throws
/// InfeasibleSpec when the sizes break an axiom, and std::runtime_error when
/// the custom sampler accepts nothing within its attempt budget.
GeneratedHeptagramType generate_heptagram_type(const std::array<std::size_t, 7>& w_sizes,
                                               const std::array<std::size_t, 7>& y_sizes,
                                               HeptagramProfile profile = HeptagramProfile::all_complete,
                                               Rng* rng = nullptr, const CustomProfileOptions& custom = {});

/// Lexicographically smallest part-size vector over all rotations and
/// reflections of the index cycle. For heptagram-type witnesses the W sizes
/// come first and the Y sizes follow, moved by the same symmetry.
std::vector<std::size_t> size_signature(const T11Witness& w);
std::vector<std::size_t> size_signature(const HeptagramTypeWitness& w);

/// Witness with indices rotated/reflected to the size signature.
T11Witness canonicalize(const T11Witness& w);

/// Image of a witness under the index map i -> (reflect ? -i : i) + shift.
HeptagramTypeWitness transform(const HeptagramTypeWitness& w, int shift, bool reflect);

/// Result of one structural property check on a heptagram.
struct PropertyCheck {
    std::string name;
    bool holds = true;
    std::string detail;
};

/// If W[i] is complete to W[i+1], it is complete to W[i+2] and W[i-1] is
/// complete to W[i+1].
PropertyCheck check_complete_propagation(const Graph& g, const HeptagramWitness& w);
/// W[i] complete to W[i+1] or W[i+2] complete to W[i+3], for every i.
PropertyCheck check_alternating_completeness(const Graph& g, const HeptagramWitness& w);
/// Some index t with W[j-1] complete to W[j+1] for j != t and W[j] complete
/// to W[j+1] for j in {t-3, t-2, t+1, t+2}, and the common-neighbor and
/// connecting-path consequences for every u in W[i-2], v in W[i+2].
PropertyCheck check_common_path_index(const Graph& g, const HeptagramWitness& w);
/// No two Y-vertices of the same type (among `outside`) are adjacent.
PropertyCheck check_same_type_y_nonadjacent(const Graph& g, const HeptagramWitness& w, const VertexSet& outside);
/// V-vertices of consecutive types are adjacent and both complete to W[i-3].
PropertyCheck check_consecutive_v_vertices(const Graph& g, const HeptagramWitness& w, const VertexSet& outside);

/// All five checks above.
std::vector<PropertyCheck> heptagram_property_suite(const Graph& g, const HeptagramWitness& w,
                                                    const VertexSet& outside);

} // namespace heptalab
