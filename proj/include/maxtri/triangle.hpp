#pragma once
/**
 * Largest-area triangle algorithms.
 *
 *  - ds_triangle: the original linear-time pointer walk, reproduced with its
 *    exact control flow. It is not always optimal.
 *  - quadratic_triangle: every root gets a fresh two-pointer sweep, O(n^2).
 *  - dnc_triangle: divide and conquer on two "dividing" largest rooted
 *    triangles, O(n log n).
 */

#include <cstddef>
#include <mutex>
#include <vector>

#include "maxtri/geometry.hpp"

namespace maxtri {

struct TraceStep {
    char pointer = 'a';
    std::size_t from = 0;
    std::size_t to = 0;
    DoubledArea area_after;
};

struct Checkpoint {
    IndexTuple tuple;
    DoubledArea area;
};

// Pointer moves of a walk plus every update of its running maximum. Checkpoint
// areas never decrease.
struct RunTrace {
    std::vector<TraceStep> steps;
    std::vector<Checkpoint> best_so_far;
};

struct TriangleRun {
    IndexTuple triangle;
    RunTrace trace;
};

// The polygon is stored CCW; this walk follows the clockwise successor, so
// next(v) is the CCW predecessor. `>=` comparisons throughout, b and c keep
// their positions when a advances.
TriangleRun ds_triangle(const ConvexPolygon& polygon, std::size_t root);

IndexTuple quadratic_triangle(const ConvexPolygon& polygon);

struct SubPolygon {
    ConvexPolygon polygon;
    std::vector<std::size_t> parent_index;  // vertex i of `polygon` is parent vertex parent_index[i]
};

struct SubproblemSplit {
    std::vector<SubPolygon> parts;
    bool interleaving = false;
};

/// Splits `polygon` along two dividing triangles.
///
/// The distinct vertices of `ta` and `tm` cut the boundary into elementary
/// intervals. A triangle interleaving both dividing triangles takes one vertex
/// from each interval of `ta` and one from each interval of `tm`; its vertices
/// are split points or interior vertices of elementary intervals. Interiors
/// that can appear together in such a triangle are grouped, and every group
/// becomes one part together with all split points. Six distinct alternating
/// split points give the two classic parts; other configurations give one.
SubproblemSplit split_subproblems(const ConvexPolygon& polygon, const IndexTuple& ta, const IndexTuple& tm);

// Vertex of the largest interval cut by `ta` (vertex count, ties to the lowest
// starting index) that sits at its middle.
std::size_t median_of_largest_interval(const ConvexPolygon& polygon, const IndexTuple& ta);

struct DncNode {
    std::size_t size = 0;
    std::vector<std::size_t> part_sizes;
    bool interleaving = false;
    bool fallback = false;  // a part did not shrink; the node was solved directly
};

struct DncStats {
    std::vector<DncNode> nodes;
    std::size_t bound_violations = 0;
    std::size_t fallback_nodes = 0;
    std::size_t max_depth = 0;
    std::mutex mutex;
};

struct DncOptions {
    // Throw std::logic_error when a split breaks the part-size bounds.
    bool check_split_bounds = false;
    // Run both halves of large splits concurrently.
    bool parallel = false;
    DncStats* stats = nullptr;
};

// ceil(5/6 (n + 6))
std::size_t split_part_limit(std::size_t n);

IndexTuple dnc_triangle(const ConvexPolygon& polygon, const DncOptions& options = {});

}  // namespace maxtri
