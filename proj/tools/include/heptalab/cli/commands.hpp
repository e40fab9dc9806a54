#pragma once

#include "heptalab/decomposition.hpp"
#include "heptalab/graph.hpp"
#include "heptalab/structures.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heptalab::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
    exit_clean = 0,
    exit_violations = 1,
    exit_inconclusive = 2,
    exit_input_error = 3,
};

/// Bad command-line values or unreadable input.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string_view tool_version() noexcept;

/// Worker count from HEPTALAB_WORKERS, else 1.
unsigned default_workers();

nlohmann::json vertex_list(const VertexSet& s);
nlohmann::json witness_json(const T11Witness& w);
/// Parts are W[0..6] followed by Y[0..6].
nlohmann::json witness_json(const HeptagramTypeWitness& w);
nlohmann::json witness_json(const HarmoniousPartition& p);

struct AnalyzeOptions {
    bool strict = false;
    /// Search for harmonious cutsets and heptagram/T11 witnesses on class
    /// members ((odd hole, full house)-free graphs).
    bool structures = false;
    bool timings = true;
    unsigned workers = 1;
    std::uint64_t budget = 10'000'000;
    /// Echoed into every report.
    std::uint64_t seed = 0;
};

struct GraphReport {
    nlohmann::json json;
    bool inconclusive = false;
    /// A class member with chi > omega + 1.
    bool violation = false;
};

GraphReport analyze_graph(const Graph& g, const AnalyzeOptions& options);

/// One JSON line per input line. Parse errors become error records; with
/// `strict` the run stops at the first one.
int cmd_analyze(std::istream& in, std::ostream& out, std::ostream& err, const AnalyzeOptions& options);

enum class Theorem { t1_3, t14_bound, t14_equality, perfection, t2_3 };

std::optional<Theorem> parse_theorem(std::string_view id);
std::string_view to_string(Theorem t) noexcept;

struct CorpusSpec {
    /// Every graph of order 0..N up to isomorphism.
    std::optional<std::size_t> enumerate;
    /// graph6 file, one graph per line.
    std::optional<std::string> file;
    /// Additional G(n, 1/2) samples; orders cycle through random_orders.
    std::size_t random_count = 0;
    std::vector<std::size_t> random_orders;
};

struct VerifyOptions {
    Theorem theorem = Theorem::t14_bound;
    CorpusSpec corpus;
    std::uint64_t budget = 10'000'000;
    unsigned workers = 1;
    std::uint64_t seed = 1;
    bool timings = true;
};

struct TheoremVerdict {
    Theorem theorem = Theorem::t14_bound;
    std::size_t examined = 0;
    std::size_t population = 0;
    std::size_t inconclusive = 0;
    std::vector<std::string> violations;
    std::vector<std::string> inconclusive_graphs;
    double elapsed_ms = 0;

    int exit_code() const noexcept;
};

/// Outcome of one theorem on one graph.
struct TheoremCase {
    bool in_population = false;
    bool violation = false;
    bool inconclusive = false;
};

TheoremCase check_theorem(Theorem t, const Graph& g, std::uint64_t budget);

/// Throws InputError for a missing or malformed corpus.
TheoremVerdict verify_theorem(const VerifyOptions& options);
nlohmann::json verdict_json(const TheoremVerdict& v, const VerifyOptions& options);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

struct GenerateOptions {
    enum class Kind { t11, heptagram } kind = Kind::t11;
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> ysizes;
    std::size_t count = 1;
    std::uint64_t seed = 1;
    /// Randomly relabel every instance.
    bool shuffle = false;
    HeptagramProfile profile = HeptagramProfile::all_complete;
    /// Print bare graph6 lines instead of JSON records.
    bool graph6_only = false;
};

int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err);

struct DecomposeOptions {
    std::uint64_t budget = 10'000'000;
    std::size_t max_cutset = 4;
    PathInterior interior = PathInterior::avoid_cutset;
};

nlohmann::json decompose_graph(const Graph& g, const DecomposeOptions& options);
int cmd_decompose(std::istream& in, std::ostream& out, std::ostream& err, const DecomposeOptions& options);

std::vector<std::size_t> parse_size_list(std::string_view csv);

} // namespace heptalab::cli
