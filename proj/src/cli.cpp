#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <sstream>

#include "maxtri/io.hpp"
#include "maxtri/oracle.hpp"
#include "maxtri/quadrilateral.hpp"

namespace maxtri {

namespace {

std::string load_input(const std::string& name) {
    if (const auto f = fixture_by_name(name)) return std::string(fixture_text(*f));
    std::ifstream in(name, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + name + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
    out << text;
}

RunTrace trace_to_file_order(const PolygonFile& file, const RunTrace& t) {
    RunTrace out;
    for (TraceStep s : t.steps) {
        s.from = to_file_index(file, s.from);
        s.to = to_file_index(file, s.to);
        out.steps.push_back(s);
    }
    for (const Checkpoint& c : t.best_so_far) out.best_so_far.push_back({to_file_order(file, c.tuple), c.area});
    return out;
}

struct SolveArgs {
    std::string alg;
    std::string in;
    std::string json_out;
    std::string svg_out;
    bool trace = false;
    std::size_t root = 0;
};

int solve(const SolveArgs& a, std::ostream& out) {
    const std::string text = load_input(a.in);
    const PolygonFile file = parse_polygon_file(text);
    const ConvexPolygon& p = file.polygon;
    if (a.root >= p.size()) throw Error(ErrorCode::InvalidInput, "root out of range");
    const std::size_t root = to_file_index(file, a.root);

    IndexTuple result;
    std::optional<RunTrace> trace;
    const auto start = std::chrono::steady_clock::now();
    if (a.alg == "ds") {
        auto run = ds_triangle(p, root);
        result = std::move(run.triangle);
        trace = std::move(run.trace);
    } else if (a.alg == "quadratic") {
        result = quadratic_triangle(p);
    } else if (a.alg == "dnc") {
        result = dnc_triangle(p);
    } else if (a.alg == "oracle") {
        result = brute_force_max_kgon(p, 3);
    } else if (a.alg == "ds-quad") {
        auto run = ds_quadrilateral(p, root);
        result = std::move(run.quadrilateral);
        trace = std::move(run.trace);
    } else {
        result = brute_force_max_kgon(p, 4);
    }
    const auto stop = std::chrono::steady_clock::now();

    ResultRecord rec;
    rec.algorithm = a.alg;
    rec.input_digest = fnv1a64(text);
    rec.indices = to_file_order(file, result);
    rec.area = doubled_area(p, result);
    rec.wall_time_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
    if (a.trace && trace) rec.trace = trace_to_file_order(file, *trace);

    const std::string json = to_json(rec);
    out << json;
    if (!a.json_out.empty()) write_file(a.json_out, json);
    if (!a.svg_out.empty()) {
        write_file(a.svg_out, render_svg(file.points, rec.indices, rec.trace ? &*rec.trace : nullptr));
    }
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Largest inscribed triangles and quadrilaterals in convex polygons", "maxtri"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve_cmd = app.add_subcommand("solve", "Run one algorithm on a polygon file");
    solve_cmd->add_option("--alg", sa.alg, "Algorithm")
        ->required()
        ->check(CLI::IsMember({"ds", "quadratic", "dnc", "oracle", "ds-quad", "oracle-quad"}));
    solve_cmd->add_option("--in", sa.in, "Polygon file, or fixture9 / fixture16")->required();
    solve_cmd->add_option("--json", sa.json_out, "Also write the result record here");
    solve_cmd->add_option("--svg", sa.svg_out, "Write an SVG drawing here");
    solve_cmd->add_flag("--trace", sa.trace, "Include the pointer trace of the walks");
    solve_cmd->add_option("--root", sa.root, "Starting vertex of the walks (file order)");

    FuzzConfig fc;
    std::vector<std::string> target_names{"quadratic", "dnc"};
    std::vector<std::string> corpus_files;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Differential fuzzing against the oracle");
    fuzz_cmd->add_option("--trials", fc.trials, "Number of random polygons")->capture_default_str()->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("--nmin", fc.n_min, "Smallest vertex count")->capture_default_str();
    fuzz_cmd->add_option("--nmax", fc.n_max, "Largest vertex count")->capture_default_str();
    fuzz_cmd->add_option("--bound", fc.coord_bound, "Coordinates lie in [0, bound]")->capture_default_str();
    fuzz_cmd->add_option("--seed", fc.seed, "Campaign seed")->capture_default_str();
    fuzz_cmd->add_option("--targets", target_names, "Comma-separated: ds, quadratic, dnc, ds-quad")->delimiter(',');
    fuzz_cmd->add_option("--k", fc.k, "Polygon size the oracle maximizes")->capture_default_str()->check(CLI::IsMember({3, 4}));
    fuzz_cmd->add_flag("--shrink", fc.shrink, "Shrink failing polygons");
    fuzz_cmd->add_option("--threads", fc.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("--corpus", corpus_files, "Polygon files replacing the generator");

    std::string bench_alg;
    std::vector<std::size_t> sizes;
    std::uint64_t bench_seed = 0;
    std::size_t reps = 5;
    auto* bench_cmd = app.add_subcommand("bench", "Median wall time per size, CSV");
    bench_cmd->add_option("--alg", bench_alg, "Algorithm")->required()->check(CLI::IsMember({"quadratic", "dnc"}));
    bench_cmd->add_option("--sizes", sizes, "Comma-separated vertex counts")->required()->delimiter(',');
    bench_cmd->add_option("--seed", bench_seed, "Polygon seed")->capture_default_str();
    bench_cmd->add_option("--reps", reps, "Repetitions per size")->capture_default_str()->check(CLI::PositiveNumber);

    auto* fixtures_cmd = app.add_subcommand("fixtures", "Bundled counter-example fixtures");
    fixtures_cmd->require_subcommand(1);
    auto* verify_cmd = fixtures_cmd->add_subcommand("verify", "Check the counter-example claims");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (*solve_cmd) return solve(sa, out);

        if (*fuzz_cmd) {
            fc.targets.clear();
            for (const auto& t : target_names) fc.targets.push_back(parse_target(t));
            for (const auto& path : corpus_files) fc.corpus.push_back(parse_polygon_file(load_input(path)).polygon);
            const FuzzReport report = differential_fuzz(fc);
            out << to_json(report);
            return report.corrected_failures() ? 1 : 0;
        }

        if (*bench_cmd) {
            const auto alg = bench_alg == "dnc" ? BenchAlgorithm::Dnc : BenchAlgorithm::Quadratic;
            out << bench_csv(run_bench(alg, sizes, bench_seed, reps));
            return 0;
        }

        if (*verify_cmd) {
            bool ok = true;
            for (const FixtureCheck& c : verify_fixtures()) {
                out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
                ok = ok && c.pass;
            }
            if (!ok) err << "fixture claims do not hold\n";
            return ok ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::InvalidInput && (*fuzz_cmd) ? 2 : 1;
    }
    return 2;
}

}  // namespace maxtri
