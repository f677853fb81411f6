#include <algorithm>
#include <chrono>
#include <cstdio>
#include <json.hpp>

#include "maxtri/io.hpp"
#include "maxtri/random_polygon.hpp"

namespace maxtri {

using Json = nlohmann::ordered_json;

namespace {

Json indices_json(const IndexTuple& t) { return Json(std::vector<std::size_t>(t.begin(), t.end())); }

Json points_json(std::span<const Point> pts) {
    Json a = Json::array();
    for (const Point& p : pts) a.push_back({p.x, p.y});
    return a;
}

Json trace_json(const RunTrace& trace) {
    Json steps = Json::array();
    for (const TraceStep& s : trace.steps) {
        steps.push_back({{"pointer", std::string(1, s.pointer)}, {"from", s.from}, {"to", s.to},
                         {"doubled_area_after", s.area_after.to_string()}});
    }
    Json best = Json::array();
    for (const Checkpoint& c : trace.best_so_far) {
        best.push_back({{"indices", indices_json(c.tuple)}, {"doubled_area", c.area.to_string()}});
    }
    return {{"steps", steps}, {"best_so_far", best}};
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

std::string to_json(const ResultRecord& r) {
    Json j;
    j["algorithm"] = r.algorithm;
    j["input_digest"] = "fnv1a64:" + hex64(r.input_digest);
    j["indices"] = indices_json(r.indices);
    j["doubled_area"] = r.area.to_string();
    j["wall_time_ns"] = r.wall_time_ns;
    if (r.trace) j["trace"] = trace_json(*r.trace);
    return j.dump(2) + "\n";
}

std::string to_json(const FuzzReport& r) {
    const FuzzConfig& c = r.config;
    Json targets = Json::array();
    for (Target t : c.targets) targets.push_back(to_string(t));
    Json cfg{{"trials", c.trials},
             {"n_min", c.n_min},
             {"n_max", c.n_max},
             {"coord_bound", c.coord_bound},
             {"seed", std::to_string(c.seed)},
             {"targets", targets},
             {"k", c.k},
             {"shrink", c.shrink},
             {"corpus_size", c.corpus.size()}};

    Json stats = Json::array();
    for (const TargetStats& s : r.stats) {
        stats.push_back({{"target", to_string(s.target)},
                         {"runs", s.runs},
                         {"failures", s.failures},
                         {"max_deficit", s.max_deficit.to_string()}});
    }
    Json failures = Json::array();
    for (const FuzzFailure& f : r.failures) {
        failures.push_back({{"trial", f.trial},
                            {"seed", f.seed ? Json(std::to_string(*f.seed)) : Json(nullptr)},
                            {"target", to_string(f.target)},
                            {"polygon", points_json(f.polygon.vertices())},
                            {"target_indices", indices_json(f.target_tuple)},
                            {"target_doubled_area", f.target_area.to_string()},
                            {"oracle_indices", indices_json(f.oracle_tuple)},
                            {"oracle_doubled_area", f.oracle_area.to_string()},
                            {"deficit", f.deficit.to_string()},
                            {"shrunk", f.shrunk ? points_json(f.shrunk->vertices()) : Json(nullptr)}});
    }
    Json j{{"config", cfg}, {"trials_run", r.trials_run}, {"stats", stats}, {"failures", failures}};
    return j.dump(2) + "\n";
}

std::string render_svg(std::span<const Point> points, const IndexTuple& result, const RunTrace* trace) {
    std::int64_t min_x = points[0].x, max_x = points[0].x, min_y = points[0].y, max_y = points[0].y;
    for (const Point& p : points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const std::int64_t span = std::max<std::int64_t>({max_x - min_x, max_y - min_y, 1});
    const std::int64_t mx = std::max<std::int64_t>((max_x - min_x + 19) / 20, 1);
    const std::int64_t my = std::max<std::int64_t>((max_y - min_y + 19) / 20, 1);
    const std::int64_t width = max_x - min_x + 2 * mx;
    const std::int64_t height = max_y - min_y + 2 * my;
    const std::int64_t stroke = std::max<std::int64_t>(span / 400, 1);

    // SVG y grows downwards.
    auto xy = [&](const Point& p) {
        return std::to_string(p.x - min_x + mx) + "," + std::to_string(max_y - p.y + my);
    };
    auto poly_points = [&](auto&& indices) {
        std::string s;
        for (std::size_t i : indices) {
            if (!s.empty()) s += ' ';
            s += xy(points[i]);
        }
        return s;
    };

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + std::to_string(width) + " " +
                      std::to_string(height) + "\">\n";
    std::vector<std::size_t> all(points.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    out += "  <polygon points=\"" + poly_points(all) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"" +
           std::to_string(stroke) + "\"/>\n";
    if (trace) {
        for (const Checkpoint& c : trace->best_so_far) {
            out += "  <polygon points=\"" + poly_points(c.tuple) +
                   "\" fill=\"none\" stroke=\"steelblue\" stroke-opacity=\"0.6\" stroke-dasharray=\"" +
                   std::to_string(4 * stroke) + "\" stroke-width=\"" + std::to_string(stroke) + "\"/>\n";
        }
    }
    out += "  <polygon points=\"" + poly_points(result) + "\" fill=\"red\" fill-opacity=\"0.35\" stroke=\"red\" stroke-width=\"" +
           std::to_string(stroke) + "\"/>\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto c = xy(points[i]);
        const auto comma = c.find(',');
        out += "  <circle cx=\"" + c.substr(0, comma) + "\" cy=\"" + c.substr(comma + 1) + "\" r=\"" +
               std::to_string(3 * stroke) + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

std::vector<BenchRow> run_bench(BenchAlgorithm alg, const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                std::size_t reps) {
    if (reps == 0) throw Error(ErrorCode::InvalidInput, "reps must be at least 1");
    std::vector<ConvexPolygon> polygons;
    for (std::size_t n : sizes) polygons.push_back(random_convex_polygon(n, kCoordinateBound, trial_seed(seed, n)));
    std::vector<std::vector<std::int64_t>> times(sizes.size());
    std::vector<IndexTuple> result(sizes.size());
    // Repetitions sweep all sizes in turn, so slow spells of the machine hit
    // every size alike.
    for (std::size_t r = 0; r < reps; ++r) {
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            const auto start = std::chrono::steady_clock::now();
            result[i] = alg == BenchAlgorithm::Quadratic ? quadratic_triangle(polygons[i]) : dnc_triangle(polygons[i]);
            const auto stop = std::chrono::steady_clock::now();
            times[i].push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
        }
    }
    std::vector<BenchRow> rows;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        std::sort(times[i].begin(), times[i].end());
        rows.push_back({sizes[i], doubled_area(polygons[i], result[i]), times[i][times[i].size() / 2]});
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool with_time) {
    std::string out = with_time ? "n,doubled_area,median_ns\n" : "n,doubled_area\n";
    for (const BenchRow& r : rows) {
        out += std::to_string(r.n) + "," + r.area.to_string();
        if (with_time) out += "," + std::to_string(r.median_ns);
        out += "\n";
    }
    return out;
}

}  // namespace maxtri
