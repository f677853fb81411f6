#include "maxtri/geometry.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace maxtri {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::NotConvex: return "NotConvex";
        case ErrorCode::Collinear: return "Collinear";
        case ErrorCode::Duplicate: return "Duplicate";
        case ErrorCode::TooFew: return "TooFew";
        case ErrorCode::CoordinateOverflow: return "CoordinateOverflow";
        case ErrorCode::PointNotOnHull: return "PointNotOnHull";
        case ErrorCode::ResourceExhausted: return "ResourceExhausted";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, std::optional<std::size_t> vertex)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), vertex_(vertex) {}

bool within_bounds(Point p) {
    return p.x >= -kCoordinateBound && p.x <= kCoordinateBound && p.y >= -kCoordinateBound &&
           p.y <= kCoordinateBound;
}

namespace {

void require_bounds(std::span<const Point> points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!within_bounds(points[i])) {
            throw Error(ErrorCode::CoordinateOverflow,
                        "vertex " + std::to_string(i) + " exceeds |coordinate| <= 2^29", i);
        }
    }
}

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

// Pseudo-angle ordering of nonzero direction vectors over [0, 2pi).
bool angle_less(Point u, Point v) {
    const bool uh = u.y < 0 || (u.y == 0 && u.x < 0);
    const bool vh = v.y < 0 || (v.y == 0 && v.x < 0);
    if (uh != vh) return !uh;
    return cross(u, v) > 0;
}

}  // namespace

int orientation(Point p, Point q, Point r) { return sign(cross(q - p, r - p)); }

DoubledArea doubled_triangle_area(Point p, Point q, Point r) { return DoubledArea{cross(q - p, r - p)}; }

DoubledArea doubled_polygon_area(std::span<const Point> points) {
    if (points.size() < 3) {
        throw Error(ErrorCode::InvalidInput, "polygon area needs at least 3 points");
    }
    require_bounds(points);
    __int128 sum = 0;
    const Point origin = points[0];
    for (std::size_t i = 1; i + 1 < points.size(); ++i) {
        sum += cross(points[i] - origin, points[i + 1] - origin);
    }
    if (sum > std::numeric_limits<std::int64_t>::max() || sum < std::numeric_limits<std::int64_t>::min()) {
        throw Error(ErrorCode::CoordinateOverflow, "doubled polygon area exceeds 64 bits");
    }
    return DoubledArea{static_cast<std::int64_t>(sum)};
}

ConvexPolygon ConvexPolygon::from_trusted(std::vector<Point> ccw_vertices) {
    return ConvexPolygon(std::move(ccw_vertices));
}

ConvexPolygon validate_convex_polygon(std::span<const Point> points, Orientation declared) {
    const std::size_t n = points.size();
    if (n < 3) {
        throw Error(ErrorCode::TooFew, "a polygon needs at least 3 vertices, got " + std::to_string(n));
    }
    require_bounds(points);

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return points[a] < points[b] || (points[a] == points[b] && a < b);
    });
    for (std::size_t i = 1; i < n; ++i) {
        if (points[order[i]] == points[order[i - 1]]) {
            throw Error(ErrorCode::Duplicate, "vertex " + std::to_string(order[i]) + " repeats vertex " +
                                                  std::to_string(order[i - 1]),
                        order[i]);
        }
    }

    const int want = declared == Orientation::CCW ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const std::size_t k = (i + 2) % n;
        const int o = orientation(points[i], points[j], points[k]);
        if (o == 0) {
            throw Error(ErrorCode::Collinear, "vertices " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                                                  std::to_string(k) + " are collinear",
                        j);
        }
        if (o != want) {
            throw Error(ErrorCode::NotConvex, "turn at vertex " + std::to_string(j) + " has the wrong orientation", j);
        }
    }

    std::vector<Point> ccw(points.begin(), points.end());
    if (declared == Orientation::CW) std::reverse(ccw.begin(), ccw.end());

    // Every turn agrees, so the edge directions rotate monotonically; a simple
    // polygon wraps around exactly once.
    std::size_t wraps = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point e0 = ccw[(i + 1) % n] - ccw[i];
        const Point e1 = ccw[(i + 2) % n] - ccw[(i + 1) % n];
        if (angle_less(e1, e0)) ++wraps;
    }
    if (wraps != 1) {
        throw Error(ErrorCode::NotConvex, "boundary winds " + std::to_string(wraps) + " times");
    }
    return ConvexPolygon(std::move(ccw));
}

ConvexPolygon canonical_cyclic_order(std::span<const Point> points) {
    if (points.size() < 3) {
        throw Error(ErrorCode::TooFew, "a polygon needs at least 3 vertices, got " + std::to_string(points.size()));
    }
    require_bounds(points);
    std::vector<Point> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) throw Error(ErrorCode::Duplicate, "repeated point in input");
    }

    // Andrew's monotone chain, strict vertices only.
    std::vector<Point> hull;
    hull.reserve(2 * sorted.size());
    for (const Point& p : sorted) {
        while (hull.size() >= 2 && orientation(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    const std::size_t lower = hull.size() + 1;
    for (auto it = sorted.rbegin() + 1; it != sorted.rend(); ++it) {
        while (hull.size() >= lower && orientation(hull[hull.size() - 2], hull.back(), *it) <= 0) hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();

    if (hull.size() != points.size()) {
        if (hull.size() < 3) throw Error(ErrorCode::Collinear, "all points are collinear");
        // Distinguish interior points from boundary (collinear) ones.
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (std::find(hull.begin(), hull.end(), points[i]) != hull.end()) continue;
            bool on_boundary = false;
            for (std::size_t h = 0; h < hull.size(); ++h) {
                if (orientation(hull[h], hull[(h + 1) % hull.size()], points[i]) == 0) on_boundary = true;
            }
            if (!on_boundary) {
                throw Error(ErrorCode::PointNotOnHull, "point " + std::to_string(i) + " lies inside the hull", i);
            }
            throw Error(ErrorCode::Collinear, "point " + std::to_string(i) + " lies on a hull edge", i);
        }
    }
    return validate_convex_polygon(hull, Orientation::CCW);
}

IndexTuple::IndexTuple(std::initializer_list<std::size_t> indices) : IndexTuple(std::vector<std::size_t>(indices)) {}

IndexTuple::IndexTuple(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw Error(ErrorCode::InvalidInput, "tuple indices must be pairwise distinct");
    }
}

bool IndexTuple::contains(std::size_t v) const {
    return std::binary_search(indices_.begin(), indices_.end(), v);
}

void check_aligned(const ConvexPolygon& polygon, const IndexTuple& tuple) {
    for (std::size_t v : tuple) {
        if (v >= polygon.size()) {
            throw Error(ErrorCode::InvalidInput,
                        "index " + std::to_string(v) + " out of range for " + std::to_string(polygon.size()) +
                            "-gon");
        }
    }
}

DoubledArea doubled_area(const ConvexPolygon& polygon, const IndexTuple& tuple) {
    check_aligned(polygon, tuple);
    if (tuple.size() < 3) return DoubledArea{0};
    if (tuple.size() == 3) return doubled_triangle_area(polygon[tuple[0]], polygon[tuple[1]], polygon[tuple[2]]);
    std::vector<Point> pts;
    pts.reserve(tuple.size());
    for (std::size_t v : tuple) pts.push_back(polygon[v]);
    return doubled_polygon_area(pts);
}

std::string to_string(const IndexTuple& tuple) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < tuple.size(); ++i) os << (i ? "," : "") << tuple[i];
    os << ')';
    return os.str();
}

}  // namespace maxtri
