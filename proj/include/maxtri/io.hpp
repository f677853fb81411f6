#pragma once
// Polygon files, bundled fixtures, JSON/SVG/CSV emitters and the CLI entry point.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxtri/fuzz.hpp"
#include "maxtri/geometry.hpp"
#include "maxtri/triangle.hpp"

namespace maxtri {

/// Text format:
///
///     n <count> <CW|CCW>
///     x y
///     ...
///
/// one vertex per line, decimal integers separated by one space. Lines that
/// start with '#' are comments and may appear anywhere.
struct PolygonFile {
    ConvexPolygon polygon;        // normalized to CCW
    Orientation declared = Orientation::CCW;
    std::vector<Point> points;    // file order
    std::vector<std::size_t> lines;  // 1-based line of each point
};

// ParseError for malformed text; validation failures keep their code and name
// the offending line.
PolygonFile parse_polygon_file(std::string_view text);

std::string format_polygon_file(std::span<const Point> points, Orientation orientation,
                                const std::vector<std::string>& comments = {});

// Index of CCW vertex `i` in file order, and the reverse mapping.
std::size_t to_file_index(const PolygonFile& file, std::size_t i);
IndexTuple to_file_order(const PolygonFile& file, const IndexTuple& t);

std::uint64_t fnv1a64(std::string_view bytes);

enum class Fixture { Triangle9, Quad16 };

// File contents of the bundled fixtures (also shipped under fixtures/).
std::string_view fixture_text(Fixture f);
// Label of each vertex in file order: "a0", "b1", ... or "a1" ... "a16".
const std::vector<std::string>& fixture_labels(Fixture f);
std::optional<Fixture> fixture_by_name(std::string_view name);
// File-order index of a label; throws InvalidInput for unknown labels.
std::size_t fixture_index(Fixture f, std::string_view label);
IndexTuple fixture_tuple(Fixture f, std::initializer_list<std::string_view> labels);

struct ResultRecord {
    std::string algorithm;
    std::uint64_t input_digest = 0;
    IndexTuple indices;  // file order
    DoubledArea area;
    std::int64_t wall_time_ns = 0;
    std::optional<RunTrace> trace;  // indices in file order
};

std::string to_json(const ResultRecord& r);
std::string to_json(const FuzzReport& r);

// Polygon outline, the result as a translucent fill and, when given, every
// running-maximum checkpoint of a trace as a dashed outline.
std::string render_svg(std::span<const Point> points, const IndexTuple& result, const RunTrace* trace = nullptr);

struct BenchRow {
    std::size_t n = 0;
    DoubledArea area;
    std::int64_t median_ns = 0;
};

enum class BenchAlgorithm { Quadratic, Dnc };

// Coordinates drawn within kCoordinateBound so large n stay feasible.
std::vector<BenchRow> run_bench(BenchAlgorithm alg, const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                std::size_t reps);
std::string bench_csv(const std::vector<BenchRow>& rows, bool with_time = true);

struct FixtureCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The counter-example claims for both bundled fixtures.
std::vector<FixtureCheck> verify_fixtures();

// argv without the program name. Returns the process exit status.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxtri
