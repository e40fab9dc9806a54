#include "heptalab/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace heptalab;
using namespace heptalab::cli;

namespace {

int with_input(const std::string& path, const std::function<int(std::istream&)>& run)
{
    if (path == "-")
        return run(std::cin);
    std::ifstream file(path);
    if (!file) {
        std::cerr << "cannot open " << path << '\n';
        return exit_input_error;
    }
    return run(file);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Structure toolkit for (odd hole, full house)-free graphs"};
    app.set_version_flag("--version", std::string(tool_version()));
    app.require_subcommand(1);
    int code = exit_clean;

    AnalyzeOptions analyze;
    analyze.workers = default_workers();
    std::string analyze_input;
    bool analyze_no_timings = false;
    auto* a = app.add_subcommand("analyze", "Report class flags, omega, chi and structures per graph6 line");
    a->add_flag("--strict", analyze.strict, "Stop at the first malformed line");
    a->add_flag("--structures", analyze.structures, "Search harmonious cutsets and heptagram/T11 witnesses");
    a->add_flag("--no-timings", analyze_no_timings, "Omit timings for byte-stable output");
    a->add_option("--budget", analyze.budget, "Search budget in path-extension steps");
    a->add_option("--workers", analyze.workers, "Worker threads")->check(CLI::PositiveNumber);
    a->add_option("--seed", analyze.seed, "Seed recorded in every report");
    a->add_option("input", analyze_input, "graph6 file, or - for stdin")->required();
    a->callback([&] {
        analyze.timings = !analyze_no_timings;
        code = with_input(analyze_input, [&](std::istream& in) { return cmd_analyze(in, std::cout, std::cerr, analyze); });
    });

    VerifyOptions verify;
    verify.workers = default_workers();
    std::string theorem;
    std::string random_orders = "8,9,10";
    std::string out_path;
    bool verify_no_timings = false;
    auto* v = app.add_subcommand("verify", "Check a theorem over a graph corpus");
    v->add_option("--theorem", theorem, "t1.3, t1.4-bound, t1.4-eq, perfection or t2.3")->required();
    v->add_option("--enumerate", verify.corpus.enumerate, "All graphs up to this order");
    v->add_option("--random", verify.corpus.random_count, "Number of G(n, 1/2) samples");
    v->add_option("--random-orders", random_orders, "Orders for the random sample, comma separated");
    v->add_option("--budget", verify.budget, "Search budget in path-extension steps");
    v->add_option("--workers", verify.workers, "Worker threads")->check(CLI::PositiveNumber);
    v->add_option("--seed", verify.seed, "Seed of the random sample");
    v->add_flag("--no-timings", verify_no_timings, "Omit timings for byte-stable output");
    v->add_option("--out", out_path, "Also write the verdict to this file");
    v->add_option("file", verify.corpus.file, "graph6 corpus file");
    v->callback([&] {
        auto parsed = parse_theorem(theorem);
        if (!parsed)
            throw CLI::ValidationError("--theorem", "unknown theorem id '" + theorem + "'");
        verify.theorem = *parsed;
        verify.timings = !verify_no_timings;
        verify.corpus.random_orders = parse_size_list(random_orders);
        if (!verify.corpus.enumerate && !verify.corpus.file && verify.corpus.random_count == 0)
            throw CLI::ValidationError("verify", "give --enumerate N, --random COUNT or a corpus file");
        if (out_path.empty()) {
            code = cmd_verify(verify, std::cout, std::cerr);
            return;
        }
        std::ostringstream buffer;
        code = cmd_verify(verify, buffer, std::cerr);
        std::cout << buffer.str();
        std::ofstream(out_path) << buffer.str();
    });

    GenerateOptions generate;
    std::string kind;
    std::string sizes;
    std::string ysizes;
    std::string profile = "complete";
    auto* g = app.add_subcommand("generate", "Emit structured instances with their witnesses");
    g->add_option("--kind", kind, "t11 or heptagram")->required()->check(CLI::IsMember({"t11", "heptagram"}));
    g->add_option("--sizes", sizes, "Part sizes, comma separated (11 for t11, 7 for heptagram)")->required();
    g->add_option("--ysizes", ysizes, "Y part sizes for heptagram, comma separated");
    g->add_option("--count", generate.count, "Number of instances");
    g->add_option("--seed", generate.seed, "Seed for shuffling and the custom profile");
    g->add_flag("--shuffle", generate.shuffle, "Relabel vertices randomly");
    g->add_option("--profile", profile, "complete or custom")->check(CLI::IsMember({"complete", "custom"}));
    g->add_flag("--graph6-only", generate.graph6_only, "Print graph6 lines only");
    g->callback([&] {
        generate.kind = kind == "t11" ? GenerateOptions::Kind::t11 : GenerateOptions::Kind::heptagram;
        generate.sizes = parse_size_list(sizes);
        if (!ysizes.empty())
            generate.ysizes = parse_size_list(ysizes);
        generate.profile = profile == "custom" ? HeptagramProfile::custom : HeptagramProfile::all_complete;
        code = cmd_generate(generate, std::cout, std::cerr);
    });

    DecomposeOptions decompose;
    std::string decompose_input;
    bool literal_paths = false;
    auto* d = app.add_subcommand("decompose", "Search a harmonious cutset per graph6 line");
    d->add_option("--budget", decompose.budget, "Search budget in path-extension steps");
    d->add_option("--max-cutset", decompose.max_cutset, "Largest cutset tried on large graphs");
    d->add_flag("--literal-paths", literal_paths, "Let path interiors use cutset parts other than the endpoints'");
    d->add_option("input", decompose_input, "graph6 file, or - for stdin")->required();
    d->callback([&] {
        decompose.interior = literal_paths ? PathInterior::avoid_endpoint_parts : PathInterior::avoid_cutset;
        code = with_input(decompose_input,
                          [&](std::istream& in) { return cmd_decompose(in, std::cout, std::cerr, decompose); });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int status = app.exit(e);
        return status == 0 ? exit_clean : exit_input_error;
    } catch (const InputError& e) {
        std::cerr << e.what() << '\n';
        return exit_input_error;
    }
    return code;
}
