#pragma once
// Test-side ground truth: independent area formulas, brute-force filters and
// an exhaustive enumerator of small lattice polygons.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "maxtri/geometry.hpp"
#include "maxtri/random_polygon.hpp"

namespace support {

using maxtri::ConvexPolygon;
using maxtri::IndexTuple;
using maxtri::Point;

// Twice the area of triangle pqr, unsigned, written out coordinate-wise.
inline std::int64_t tri2(Point p, Point q, Point r) {
    const std::int64_t v = p.x * (q.y - r.y) + q.x * (r.y - p.y) + r.x * (p.y - q.y);
    return v < 0 ? -v : v;
}

// Twice the area of a convex k-gon given in cyclic order, by fanning from its
// first vertex.
inline std::int64_t fan2(const ConvexPolygon& p, const std::vector<std::size_t>& idx) {
    std::int64_t sum = 0;
    for (std::size_t i = 1; i + 1 < idx.size(); ++i) sum += tri2(p[idx[0]], p[idx[i]], p[idx[i + 1]]);
    return sum;
}

inline std::int64_t area_of(const ConvexPolygon& p, const IndexTuple& t) {
    return fan2(p, std::vector<std::size_t>(t.begin(), t.end()));
}

inline std::int64_t best_triangle_area(const ConvexPolygon& p) {
    std::int64_t best = 0;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) best = std::max(best, tri2(p[i], p[j], p[k]));
    return best;
}

inline std::int64_t best_quad_area(const ConvexPolygon& p) {
    std::int64_t best = 0;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l) best = std::max(best, fan2(p, {i, j, k, l}));
    return best;
}

// Every triangle of p, sorted.
inline std::vector<IndexTuple> all_triangles(const ConvexPolygon& p) {
    std::vector<IndexTuple> out;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) out.push_back(IndexTuple{i, j, k});
    return out;
}

// Brute-force stability: replace one vertex by every other vertex of p.
inline bool stable_at(const ConvexPolygon& p, const IndexTuple& t, std::size_t fixed_mask) {
    const std::int64_t area = tri2(p[t[0]], p[t[1]], p[t[2]]);
    for (std::size_t slot = 0; slot < 3; ++slot) {
        if (fixed_mask >> slot & 1) continue;
        for (std::size_t w = 0; w < p.size(); ++w) {
            if (t.contains(w)) continue;
            Point q[3] = {p[t[0]], p[t[1]], p[t[2]]};
            q[slot] = p[w];
            if (tri2(q[0], q[1], q[2]) > area) return false;
        }
    }
    return true;
}

inline bool naive_3_stable(const ConvexPolygon& p, const IndexTuple& t) { return stable_at(p, t, 0); }

inline bool naive_2_stable(const ConvexPolygon& p, const IndexTuple& t, std::size_t root) {
    std::size_t mask = 0;
    for (std::size_t s = 0; s < 3; ++s)
        if (t[s] == root) mask = std::size_t{1} << s;
    return stable_at(p, t, mask);
}

// Walks every strictly convex polygon whose vertices lie on the grid
// {0..side-1}^2 and has between 3 and max_n vertices. Each polygon is visited
// once, CCW, starting from its lexicographically smallest vertex.
inline void for_each_lattice_polygon(int side, std::size_t max_n, const std::function<void(const ConvexPolygon&)>& visit) {
    std::vector<Point> grid;
    for (int x = 0; x < side; ++x)
        for (int y = 0; y < side; ++y) grid.push_back({x, y});

    std::vector<Point> path;
    std::function<void()> extend = [&] {
        const Point s = path.front();
        const std::size_t k = path.size();
        if (k >= 3 && maxtri::orientation(path[k - 2], path[k - 1], s) > 0 && maxtri::orientation(path[k - 1], s, path[1]) > 0) {
            visit(maxtri::validate_convex_polygon(path, maxtri::Orientation::CCW));
        }
        if (k == max_n) return;
        for (const Point& v : grid) {
            if (!(s < v)) continue;
            if (maxtri::orientation(s, path.back(), v) <= 0 && k > 1) continue;
            if (k >= 2 && maxtri::orientation(path[k - 2], path[k - 1], v) <= 0) continue;
            path.push_back(v);
            extend();
            path.pop_back();
        }
    };
    for (const Point& s : grid) {
        path.assign(1, s);
        extend();
    }
}

// Seeded corpus shared by the randomized tests.
inline std::vector<ConvexPolygon> random_corpus(std::size_t count, std::size_t n_min, std::size_t n_max, std::int64_t bound,
                                                std::uint64_t seed) {
    std::vector<ConvexPolygon> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t s = maxtri::splitmix64(seed + i);
        const std::size_t n = n_min + s % (n_max - n_min + 1);
        out.push_back(maxtri::random_convex_polygon(n, bound, s));
    }
    return out;
}

}  // namespace support
