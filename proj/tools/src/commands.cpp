#include "heptalab/cli/commands.hpp"

#include "pool.hpp"

#include "heptalab/coloring.hpp"
#include "heptalab/detectors.hpp"
#include "heptalab/enumeration.hpp"
#include "heptalab/graph6.hpp"
#include "heptalab/random.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>

#ifndef HEPTALAB_VERSION
#define HEPTALAB_VERSION "0.0.0"
#endif

namespace heptalab::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kChunk = 512;

class Stopwatch {
public:
    double lap_ms()
    {
        auto now = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    return s;
}

json header()
{
    return json{{"schema_version", kSchemaVersion}, {"tool_version", tool_version()}};
}

json search_status(const DetectionResult& r)
{
    return std::string(to_string(r.status));
}

} // namespace

std::string_view tool_version() noexcept
{
    return HEPTALAB_VERSION;
}

unsigned default_workers()
{
    if (const char* env = std::getenv("HEPTALAB_WORKERS")) {
        unsigned value = 0;
        std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec == std::errc{} && ptr == s.data() + s.size() && value > 0)
            return value;
    }
    return 1;
}

json vertex_list(const VertexSet& s)
{
    return json(s.to_vector());
}

json witness_json(const T11Witness& w)
{
    json parts = json::array();
    for (const auto& p : w.w)
        parts.push_back(vertex_list(p));
    return json{{"kind", "t11_type"}, {"parts", parts}};
}

json witness_json(const HeptagramTypeWitness& w)
{
    json parts = json::array();
    for (const auto& p : w.w)
        parts.push_back(vertex_list(p));
    for (const auto& p : w.y)
        parts.push_back(vertex_list(p));
    return json{{"kind", "heptagram_type"}, {"parts", parts}};
}

json witness_json(const HarmoniousPartition& p)
{
    json parts = json::array();
    for (const auto& x : p.parts)
        parts.push_back(vertex_list(x));
    return json{{"kind", "harmonious"},
                {"cutset", vertex_list(p.cutset)},
                {"parts", parts},
                {"sides", json::array({vertex_list(p.sides[0]), vertex_list(p.sides[1])})}};
}

GraphReport analyze_graph(const Graph& g, const AnalyzeOptions& options)
{
    GraphReport report;
    json& j = report.json;
    j = header();
    j["graph6"] = to_graph6(g);
    j["n"] = g.order();
    j["m"] = g.size();
    j["seed"] = options.seed;
    Stopwatch clock;
    json timings = json::object();

    OddHoleOptions hole_options;
    hole_options.node_budget = options.budget;
    const auto hole = find_odd_hole(g, hole_options);
    const bool full_house_free = !find_full_house(g).has_value();
    const bool k4_free = !find_k4(g).has_value();
    const bool has_c7 = find_c7_complement(g).has_value();
    timings["detectors"] = clock.lap_ms();

    json flags;
    flags["odd_hole_free"] = hole.status == SearchStatus::inconclusive ? json(nullptr)
                                                                       : json(hole.status == SearchStatus::absent);
    flags["full_house_free"] = full_house_free;
    flags["k4_free"] = k4_free;
    flags["has_c7_complement"] = has_c7;
    j["flags"] = flags;
    j["odd_hole"] = hole.hit ? json(hole.hit->vertices) : json(nullptr);
    j["odd_hole_search"] = search_status(hole);
    if (hole.status == SearchStatus::inconclusive)
        report.inconclusive = true;

    const auto omega = clique_number(g).omega;
    j["omega"] = omega;
    timings["omega"] = clock.lap_ms();
    std::optional<int> chi;
    if (g.order() <= kChromaticOrderCap) {
        chi = chromatic_number_exact(g).chi;
        j["chi"] = *chi;
    } else {
        j["chi"] = nullptr;
        report.inconclusive = true;
    }
    timings["chi"] = clock.lap_ms();

    const bool member = hole.status == SearchStatus::absent && full_house_free;
    j["class_member"] = member;
    if (member && chi && *chi > static_cast<int>(omega) + 1)
        report.violation = true;

    if (options.structures) {
        json s;
        if (!member) {
            s["skipped"] = "not (odd hole, full house)-free";
        } else {
            if (!is_connected(g)) {
                s["harmonious"] = json{{"status", "disconnected"}};
            } else {
                CutsetSearchOptions cut_options;
                cut_options.budget = options.budget;
                auto cut = find_harmonious_cutset(g, cut_options);
                s["harmonious"] = json{{"status", to_string(cut.status)},
                                       {"witness", cut.partition ? witness_json(*cut.partition) : json(nullptr)},
                                       {"steps", cut.steps}};
                if (cut.status == SearchStatus::inconclusive)
                    report.inconclusive = true;
            }
            auto hept = has_c7 ? recognize_heptagram_type(g) : std::nullopt;
            s["heptagram_type"] = hept ? witness_json(*hept) : json(nullptr);
            auto t11 = recognize_t11_type(g);
            s["t11_type"] = t11 ? witness_json(*t11) : json(nullptr);
        }
        j["structures"] = s;
        timings["structures"] = clock.lap_ms();
    }
    if (options.timings)
        j["timings_ms"] = timings;
    return report;
}

int cmd_analyze(std::istream& in, std::ostream& out, std::ostream& err, const AnalyzeOptions& options)
{
    bool any_error = false;
    bool any_inconclusive = false;
    bool any_violation = false;
    std::size_t line_number = 0;
    std::string line;
    for (bool more = true; more;) {
        struct Item {
            std::size_t line;
            std::optional<Graph> graph;
            json error;
        };
        std::vector<Item> batch;
        while (batch.size() < kChunk && (more = static_cast<bool>(std::getline(in, line)))) {
            ++line_number;
            auto text = trim(line);
            if (text.empty())
                continue;
            try {
                batch.push_back({line_number, from_graph6(text), {}});
            } catch (const Graph6Error& e) {
                json rec = header();
                rec["line"] = line_number;
                rec["error"] = e.what();
                rec["offset"] = e.offset();
                batch.push_back({line_number, std::nullopt, rec});
            }
        }
        std::vector<GraphReport> reports = parallel_map(batch.size(), options.workers, [&](std::size_t i) {
            return batch[i].graph ? analyze_graph(*batch[i].graph, options) : GraphReport{};
        });
        for (std::size_t i = 0; i < batch.size(); ++i) {
            if (!batch[i].graph) {
                any_error = true;
                err << "line " << batch[i].line << ": " << batch[i].error["error"].get<std::string>() << '\n';
                if (options.strict)
                    return exit_input_error;
                out << batch[i].error.dump() << '\n';
                continue;
            }
            reports[i].json["line"] = batch[i].line;
            out << reports[i].json.dump() << '\n';
            any_inconclusive = any_inconclusive || reports[i].inconclusive;
            any_violation = any_violation || reports[i].violation;
        }
    }
    if (any_error)
        return exit_input_error;
    if (any_violation)
        return exit_violations;
    return any_inconclusive ? exit_inconclusive : exit_clean;
}

std::optional<Theorem> parse_theorem(std::string_view id)
{
    if (id == "t1.3")
        return Theorem::t1_3;
    if (id == "t1.4-bound")
        return Theorem::t14_bound;
    if (id == "t1.4-eq")
        return Theorem::t14_equality;
    if (id == "perfection")
        return Theorem::perfection;
    if (id == "t2.3")
        return Theorem::t2_3;
    return std::nullopt;
}

std::string_view to_string(Theorem t) noexcept
{
    switch (t) {
    case Theorem::t1_3: return "t1.3";
    case Theorem::t14_bound: return "t1.4-bound";
    case Theorem::t14_equality: return "t1.4-eq";
    case Theorem::perfection: return "perfection";
    case Theorem::t2_3: return "t2.3";
    }
    return "unknown";
}

int TheoremVerdict::exit_code() const noexcept
{
    if (!violations.empty())
        return exit_violations;
    return inconclusive > 0 ? exit_inconclusive : exit_clean;
}

TheoremCase check_theorem(Theorem t, const Graph& g, std::uint64_t budget)
{
    TheoremCase c;
    OddHoleOptions hole_options;
    hole_options.node_budget = budget;
    const auto hole = find_odd_hole(g, hole_options);
    if (hole.status == SearchStatus::inconclusive) {
        c.inconclusive = true;
        return c;
    }
    if (hole.status == SearchStatus::found)
        return c;
    if (t == Theorem::t1_3 ? find_k4(g).has_value() : find_full_house(g).has_value())
        return c;

    if (t == Theorem::t2_3) {
        if (!find_c7_complement(g) || !is_connected(g))
            return c;
        CutsetSearchOptions cut_options;
        cut_options.budget = budget;
        const auto cut = find_harmonious_cutset(g, cut_options);
        if (cut.status == SearchStatus::found)
            return c;
        if (cut.status == SearchStatus::inconclusive) {
            c.inconclusive = true;
            return c;
        }
        c.in_population = true;
        c.violation = !recognize_heptagram_type(g) && !recognize_t11_type(g);
        return c;
    }

    const bool has_c7 = t == Theorem::t14_equality || t == Theorem::perfection ? find_c7_complement(g).has_value()
                                                                                : false;
    if (t == Theorem::perfection && has_c7)
        return c;
    if (g.order() > kChromaticOrderCap) {
        c.inconclusive = true;
        return c;
    }
    c.in_population = true;
    const int chi = chromatic_number_exact(g).chi;
    const int omega = static_cast<int>(clique_number(g).omega);
    switch (t) {
    case Theorem::t1_3: c.violation = chi > 4; break;
    case Theorem::t14_bound: c.violation = chi > omega + 1; break;
    case Theorem::t14_equality: c.violation = (chi == omega + 1) != (omega == 3 && has_c7); break;
    case Theorem::perfection:
        c.violation = chi != omega || (g.order() <= 12 && !is_perfect_bruteforce(g));
        break;
    case Theorem::t2_3: break;
    }
    return c;
}

namespace {

// Streams the corpus in chunks: enumerated graphs, then the file, then the
// random sample.
class Corpus {
public:
    Corpus(const CorpusSpec& spec, std::uint64_t seed) : spec_(spec), rng_(seed)
    {
        if (spec.file) {
            file_.open(*spec.file);
            if (!file_)
                throw InputError("cannot open " + *spec.file);
        }
        if (spec.random_count > 0 && spec.random_orders.empty())
            throw InputError("random sample needs at least one order");
    }

    std::vector<Graph> next_chunk()
    {
        std::vector<Graph> out;
        while (out.size() < kChunk) {
            if (spec_.enumerate && order_ <= *spec_.enumerate) {
                if (level_index_ == level_.size()) {
                    level_ = enumerate_graphs(order_);
                    level_index_ = 0;
                }
                out.push_back(level_[level_index_++]);
                if (level_index_ == level_.size()) {
                    ++order_;
                    level_.clear();
                    level_index_ = 0;
                }
                continue;
            }
            if (file_.is_open() && !file_done_) {
                std::string line;
                if (!std::getline(file_, line)) {
                    file_done_ = true;
                    continue;
                }
                ++file_line_;
                auto text = trim(line);
                if (text.empty())
                    continue;
                try {
                    out.push_back(from_graph6(text));
                } catch (const Graph6Error& e) {
                    throw InputError(*spec_.file + ":" + std::to_string(file_line_) + ": " + e.what());
                }
                continue;
            }
            if (random_done_ < spec_.random_count) {
                const std::size_t n = spec_.random_orders[random_done_ % spec_.random_orders.size()];
                out.push_back(random_graph(n, 0.5, rng_));
                ++random_done_;
                continue;
            }
            break;
        }
        return out;
    }

private:
    const CorpusSpec& spec_;
    Rng rng_;
    std::size_t order_ = 0;
    std::vector<Graph> level_;
    std::size_t level_index_ = 0;
    std::ifstream file_;
    bool file_done_ = false;
    std::size_t file_line_ = 0;
    std::size_t random_done_ = 0;
};

} // namespace

TheoremVerdict verify_theorem(const VerifyOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    TheoremVerdict v;
    v.theorem = options.theorem;
    Corpus corpus(options.corpus, options.seed);
    for (auto chunk = corpus.next_chunk(); !chunk.empty(); chunk = corpus.next_chunk()) {
        auto cases = parallel_map(chunk.size(), options.workers, [&](std::size_t i) {
            return check_theorem(options.theorem, chunk[i], options.budget);
        });
        for (std::size_t i = 0; i < chunk.size(); ++i) {
            ++v.examined;
            if (cases[i].in_population)
                ++v.population;
            if (cases[i].violation)
                v.violations.push_back(to_graph6(chunk[i]));
            if (cases[i].inconclusive) {
                ++v.inconclusive;
                v.inconclusive_graphs.push_back(to_graph6(chunk[i]));
            }
        }
    }
    v.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return v;
}

json verdict_json(const TheoremVerdict& v, const VerifyOptions& options)
{
    json j = header();
    j["theorem"] = to_string(v.theorem);
    json corpus;
    corpus["enumerate"] = options.corpus.enumerate ? json(*options.corpus.enumerate) : json(nullptr);
    corpus["file"] = options.corpus.file ? json(*options.corpus.file) : json(nullptr);
    corpus["random"] = json{{"count", options.corpus.random_count},
                            {"orders", options.corpus.random_orders},
                            {"edge_probability", 0.5}};
    j["corpus"] = corpus;
    j["seed"] = options.seed;
    j["budget"] = options.budget;
    j["examined"] = v.examined;
    j["population"] = v.population;
    j["inconclusive"] = v.inconclusive;
    j["violations"] = v.violations;
    j["inconclusive_graphs"] = v.inconclusive_graphs;
    if (options.timings)
        j["elapsed_ms"] = v.elapsed_ms;
    return j;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err)
{
    try {
        auto v = verify_theorem(options);
        out << verdict_json(v, options).dump() << '\n';
        return v.exit_code();
    } catch (const InputError& e) {
        err << e.what() << '\n';
        return exit_input_error;
    }
}

namespace {

VertexSet mapped(const VertexSet& s, const std::vector<Vertex>& perm)
{
    VertexSet out(s.universe());
    for (Vertex v : s)
        out.insert(perm[v]);
    return out;
}

template <std::size_t N>
std::array<std::size_t, N> fixed_sizes(const std::vector<std::size_t>& sizes, const char* what)
{
    if (sizes.size() != N)
        throw InputError(std::string(what) + " needs " + std::to_string(N) + " values, got " +
                         std::to_string(sizes.size()));
    std::array<std::size_t, N> out{};
    std::copy(sizes.begin(), sizes.end(), out.begin());
    return out;
}

} // namespace

int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err)
{
    try {
        Rng rng(options.seed);
        for (std::size_t index = 0; index < options.count; ++index) {
            json rec = header();
            rec["index"] = index;
            rec["seed"] = options.seed;
            Graph g;
            json witness;
            if (options.kind == GenerateOptions::Kind::t11) {
                auto made = generate_t11_type(fixed_sizes<11>(options.sizes, "--sizes"));
                if (options.shuffle) {
                    auto perm = random_permutation(made.graph.order(), rng);
                    made.graph = relabel(made.graph, perm);
                    for (auto& p : made.witness.w)
                        p = mapped(p, perm);
                }
                if (!verify_t11_type(made.graph, made.witness))
                    throw std::logic_error("generated T11 instance does not verify");
                g = made.graph;
                witness = witness_json(made.witness);
            } else {
                auto ys = options.ysizes.empty() ? std::vector<std::size_t>(7, 0) : options.ysizes;
                auto made = generate_heptagram_type(fixed_sizes<7>(options.sizes, "--sizes"),
                                                    fixed_sizes<7>(ys, "--ysizes"), options.profile, &rng);
                if (options.shuffle) {
                    auto perm = random_permutation(made.graph.order(), rng);
                    made.graph = relabel(made.graph, perm);
                    for (auto& p : made.witness.w)
                        p = mapped(p, perm);
                    for (auto& p : made.witness.y)
                        p = mapped(p, perm);
                }
                if (!verify_heptagram_type(made.graph, made.witness))
                    throw std::logic_error("generated heptagram-type instance does not verify");
                g = made.graph;
                witness = witness_json(made.witness);
                rec["attempts"] = made.attempts;
            }
            if (options.graph6_only) {
                out << to_graph6(g) << '\n';
                continue;
            }
            rec["graph6"] = to_graph6(g);
            rec["n"] = g.order();
            rec["witness"] = witness;
            out << rec.dump() << '\n';
        }
    } catch (const InfeasibleSpec& e) {
        err << "infeasible specification (axiom " << e.axiom() << "): " << e.what() << '\n';
        return exit_input_error;
    } catch (const InputError& e) {
        err << e.what() << '\n';
        return exit_input_error;
    } catch (const std::runtime_error& e) {
        err << e.what() << '\n';
        return exit_inconclusive;
    }
    return exit_clean;
}

json decompose_graph(const Graph& g, const DecomposeOptions& options)
{
    json j = header();
    j["graph6"] = to_graph6(g);
    j["n"] = g.order();
    j["budget"] = options.budget;
    j["max_cutset"] = options.max_cutset;
    j["interior"] = options.interior == PathInterior::avoid_cutset ? "avoid_cutset" : "avoid_endpoint_parts";
    if (!is_connected(g)) {
        j["status"] = "disconnected";
        j["partition"] = nullptr;
        j["steps"] = 0;
        return j;
    }
    CutsetSearchOptions search;
    search.budget = options.budget;
    search.max_cutset = options.max_cutset;
    search.interior = options.interior;
    auto result = find_harmonious_cutset(g, search);
    j["status"] = to_string(result.status);
    j["steps"] = result.steps;
    j["candidates_examined"] = result.candidates_examined;
    j["partition"] = result.partition ? witness_json(*result.partition) : json(nullptr);
    if (result.partition) {
        HarmoniousOptions check_options{options.budget, options.interior};
        auto check = verify_harmonious(g, *result.partition, check_options);
        j["verification"] = json{{"verdict", to_string(check.verdict)}, {"steps", check.steps}};
    }
    return j;
}

int cmd_decompose(std::istream& in, std::ostream& out, std::ostream& err, const DecomposeOptions& options)
{
    int code = exit_clean;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        auto text = trim(line);
        if (text.empty())
            continue;
        try {
            auto j = decompose_graph(from_graph6(text), options);
            j["line"] = line_number;
            if (j["status"] == "inconclusive" && code == exit_clean)
                code = exit_inconclusive;
            out << j.dump() << '\n';
        } catch (const Graph6Error& e) {
            err << "line " << line_number << ": " << e.what() << '\n';
            code = exit_input_error;
        }
    }
    return code;
}

std::vector<std::size_t> parse_size_list(std::string_view csv)
{
    std::vector<std::size_t> out;
    while (!csv.empty()) {
        auto comma = csv.find(',');
        auto item = trim(csv.substr(0, comma));
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw InputError("not a nonnegative integer: '" + std::string(item) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        csv.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace heptalab::cli
