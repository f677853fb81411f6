#pragma once
/**
 * Exact integer geometry for convex polygons.
 *
 * Every coordinate is bounded by kCoordinateBound in absolute value, so the
 * doubled area of any triangle or quadrilateral fits comfortably in a signed
 * 64-bit integer (|area| < 2^62). Polygon shoelace sums accumulate in 128 bits.
 */

#include <cstddef>
#include <cstdint>
#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxtri {

inline constexpr std::int64_t kCoordinateBound = std::int64_t{1} << 29;

enum class ErrorCode {
    InvalidInput,
    NotConvex,
    Collinear,
    Duplicate,
    TooFew,
    CoordinateOverflow,
    PointNotOnHull,
    ResourceExhausted,
    ParseError,
};

const char* to_string(ErrorCode code);

// All library failures are reported with this exception. `vertex` names the
// offending input position when one exists.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, std::optional<std::size_t> vertex = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> vertex() const noexcept { return vertex_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> vertex_;
};

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr bool operator==(const Point&, const Point&) = default;
    friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }

constexpr std::int64_t cross(Point u, Point v) { return u.x * v.y - u.y * v.x; }

bool within_bounds(Point p);

// Twice the Euclidean area, with orientation sign.
class DoubledArea {
public:
    constexpr DoubledArea() = default;
    constexpr explicit DoubledArea(std::int64_t v) : value_(v) {}

    constexpr std::int64_t value() const { return value_; }
    std::string to_string() const { return std::to_string(value_); }

    friend constexpr bool operator==(DoubledArea, DoubledArea) = default;
    friend constexpr auto operator<=>(DoubledArea, DoubledArea) = default;
    friend constexpr DoubledArea operator-(DoubledArea a, DoubledArea b) { return DoubledArea{a.value_ - b.value_}; }

private:
    std::int64_t value_ = 0;
};

enum class Orientation { CW, CCW };

// Sign of (q - p) x (r - p): +1 counter-clockwise, 0 collinear, -1 clockwise.
int orientation(Point p, Point q, Point r);

DoubledArea doubled_triangle_area(Point p, Point q, Point r);

// Exact shoelace sum. Throws InvalidInput for fewer than 3 points.
DoubledArea doubled_polygon_area(std::span<const Point> points);

/// A strictly convex polygon with vertices stored counter-clockwise.
///
/// Instances come from validate_convex_polygon, canonical_cyclic_order or
/// ConvexPolygon::from_trusted; the vertex list is never mutated afterwards.
class ConvexPolygon {
public:
    std::size_t size() const { return vertices_.size(); }
    const Point& operator[](std::size_t i) const { return vertices_[i]; }
    std::span<const Point> vertices() const { return vertices_; }

    std::size_t next(std::size_t i) const { return i + 1 == vertices_.size() ? 0 : i + 1; }
    std::size_t prev(std::size_t i) const { return i == 0 ? vertices_.size() - 1 : i - 1; }

    // Skips validation. The caller guarantees the CCW strict convexity
    // invariant, e.g. for subsequences of an already validated polygon.
    static ConvexPolygon from_trusted(std::vector<Point> ccw_vertices);

    friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

private:
    explicit ConvexPolygon(std::vector<Point> v) : vertices_(std::move(v)) {}
    std::vector<Point> vertices_;

    friend ConvexPolygon validate_convex_polygon(std::span<const Point>, Orientation);
};

ConvexPolygon validate_convex_polygon(std::span<const Point> points, Orientation declared);

// Recovers the CCW cycle of a point set in convex position. The
// lexicographically smallest point becomes vertex 0.
ConvexPolygon canonical_cyclic_order(std::span<const Point> points);

/// k distinct vertex indices of one polygon, kept in increasing order (which is
/// the cyclic order starting from the smallest index).
class IndexTuple {
public:
    IndexTuple() = default;
    IndexTuple(std::initializer_list<std::size_t> indices);
    explicit IndexTuple(std::vector<std::size_t> indices);

    std::size_t size() const { return indices_.size(); }
    std::size_t operator[](std::size_t i) const { return indices_[i]; }
    std::span<const std::size_t> indices() const { return indices_; }
    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }
    bool contains(std::size_t v) const;

    friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
    friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;

private:
    std::vector<std::size_t> indices_;
};

// Throws InvalidInput unless every index is in range for `polygon`.
void check_aligned(const ConvexPolygon& polygon, const IndexTuple& tuple);

// Doubled area of the P-aligned polygon `tuple` (non-negative for valid tuples).
DoubledArea doubled_area(const ConvexPolygon& polygon, const IndexTuple& tuple);

std::string to_string(const IndexTuple& tuple);

}  // namespace maxtri
