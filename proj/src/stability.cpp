#include "maxtri/stability.hpp"

#include <algorithm>
#include <cstdlib>

#include "sweep.hpp"

namespace maxtri {

namespace {

// Every closed interval between successive vertices of `a` holds a vertex of `b`.
bool covers(const IndexTuple& a, const IndexTuple& b, std::size_t n) {
    const std::size_t k = a.size();
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t u = a[i];
        const std::size_t v = a[(i + 1) % k];
        const std::size_t len = k == 1 ? n : (v + n - u) % n;
        const bool hit = std::any_of(b.begin(), b.end(), [&](std::size_t w) { return (w + n - u) % n <= len; });
        if (!hit) return false;
    }
    return true;
}

std::int64_t tri_area(const ConvexPolygon& p, std::size_t i, std::size_t j, std::size_t k) {
    return std::llabs(cross(p[j] - p[i], p[k] - p[i]));
}

void require_triangle(const ConvexPolygon& polygon, const IndexTuple& t) {
    if (t.size() != 3) throw Error(ErrorCode::InvalidInput, "expected a triangle, got " + std::to_string(t.size()) + " indices");
    check_aligned(polygon, t);
}

}  // namespace

bool interleaves(const IndexTuple& a, const IndexTuple& b, const ConvexPolygon& polygon) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::InvalidInput, "interleaving needs tuples of equal size");
    }
    check_aligned(polygon, a);
    check_aligned(polygon, b);
    if (a.size() == 0) return true;
    return covers(a, b, polygon.size()) && covers(b, a, polygon.size());
}

bool is_2_stable(const ConvexPolygon& polygon, const IndexTuple& t, std::size_t root) {
    require_triangle(polygon, t);
    if (!t.contains(root)) {
        throw Error(ErrorCode::InvalidInput, "root " + std::to_string(root) + " is not a vertex of " + to_string(t));
    }
    std::size_t u = 0, v = 0;
    {
        std::size_t others[2];
        std::size_t k = 0;
        for (std::size_t x : t)
            if (x != root) others[k++] = x;
        u = others[0];
        v = others[1];
    }
    const std::int64_t area = tri_area(polygon, root, u, v);
    for (std::size_t w = 0; w < polygon.size(); ++w) {
        if (w == root || w == u || w == v) continue;
        if (tri_area(polygon, root, w, v) > area || tri_area(polygon, root, u, w) > area) return false;
    }
    return true;
}

bool is_3_stable(const ConvexPolygon& polygon, const IndexTuple& t) {
    require_triangle(polygon, t);
    const std::size_t a = t[0], b = t[1], c = t[2];
    const std::int64_t area = tri_area(polygon, a, b, c);
    for (std::size_t w = 0; w < polygon.size(); ++w) {
        if (w == a || w == b || w == c) continue;
        if (tri_area(polygon, w, b, c) > area || tri_area(polygon, a, w, c) > area || tri_area(polygon, a, b, w) > area) {
            return false;
        }
    }
    return true;
}

bool is_k_stable(const ConvexPolygon& polygon, const IndexTuple& q) {
    if (q.size() < 3) throw Error(ErrorCode::InvalidInput, "k-stability needs k >= 3");
    check_aligned(polygon, q);
    if (q.size() == 3) return is_3_stable(polygon, q);
    const DoubledArea area = doubled_area(polygon, q);
    std::vector<std::size_t> trial(q.begin(), q.end());
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t w = 0; w < polygon.size(); ++w) {
            if (q.contains(w)) continue;
            trial.assign(q.begin(), q.end());
            trial[i] = w;
            if (doubled_area(polygon, IndexTuple(trial)) > area) return false;
        }
    }
    return true;
}

StableTriangleSet enumerate_2_stable_rooted(const ConvexPolygon& polygon, std::size_t root) {
    if (root >= polygon.size()) throw Error(ErrorCode::InvalidInput, "root out of range");
    const std::size_t n = polygon.size();
    const detail::RootedView v(polygon.vertices(), root);
    StableTriangleSet out{root, {}};

    // far_right[b]: largest area(a, w, b) over w strictly between the root and b.
    // far_left[c]: largest area(a, c, w) over w strictly between c and the root.
    std::vector<std::int64_t> far_right(n, 0), far_left(n, 0);
    {
        std::size_t d = 1;
        for (std::size_t b = 2; b < n; ++b) {
            const Point ab = v.from_root(b);
            while (d + 1 < b && cross(v.at(d + 1) - v.at(d), ab) >= 0) ++d;
            far_right[b] = std::max<std::int64_t>(0, -cross(ab, v.from_root(d)));
        }
        std::size_t e = 2;
        for (std::size_t c = 1; c + 1 < n; ++c) {
            if (e <= c) e = c + 1;
            const Point ac = v.from_root(c);
            while (e + 1 < n && cross(ac, v.at(e + 1) - v.at(e)) >= 0) ++e;
            far_left[c] = std::max<std::int64_t>(0, cross(ac, v.from_root(e)));
        }
    }

    std::size_t c = 2;
    for (std::size_t b = 1; b + 1 < n; ++b) {
        if (c <= b) c = b + 1;
        const Point ab = v.from_root(b);
        while (c + 1 < n && cross(ab, v.at(c + 1) - v.at(c)) >= 0) ++c;

        std::size_t candidates[2];
        std::size_t count = 0;
        if (c - 1 > b && v.area(b, c - 1) == v.area(b, c)) candidates[count++] = c - 1;
        candidates[count++] = c;

        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t cc = candidates[i];
            const std::int64_t area = v.area(b, cc);
            if (area < far_right[b] || area < far_left[cc]) continue;
            if (b > 1 && v.area(b - 1, cc) > area) continue;
            if (b + 1 < cc && v.area(b + 1, cc) > area) continue;
            out.triangles.push_back(IndexTuple{root, v.index(b), v.index(cc)});
        }
    }
    return out;
}

IndexTuple largest_rooted_triangle(const ConvexPolygon& polygon, std::size_t root) {
    if (root >= polygon.size()) throw Error(ErrorCode::InvalidInput, "root out of range");
    const detail::RootedBest best = detail::largest_rooted(polygon.vertices(), root);
    const detail::RootedView v(polygon.vertices(), root);
    return IndexTuple{root, v.index(best.b), v.index(best.c)};
}

std::vector<IndexTuple> enumerate_3_stable(const ConvexPolygon& polygon) {
    std::vector<IndexTuple> out;
    for (std::size_t r = 0; r < polygon.size(); ++r) {
        for (const IndexTuple& t : enumerate_2_stable_rooted(polygon, r).triangles) {
            if (t[0] == r && is_3_stable(polygon, t)) out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace maxtri
