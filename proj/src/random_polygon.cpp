#include "maxtri/random_polygon.hpp"

#include <algorithm>
#include <vector>

namespace maxtri {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t range) {
    if (range == 0) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % range;
}

namespace {

int half(Point v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; }

bool angle_less(Point u, Point v) {
    const int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return cross(u, v) > 0;
}

bool same_direction(Point u, Point v) { return cross(u, v) == 0 && half(u) == half(v); }

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

// Signed increments of one coordinate: a sorted sample split into a rising
// and a falling chain between its extremes. They sum to zero.
std::vector<std::int64_t> increments(std::size_t count, std::int64_t bound, std::mt19937_64& rng) {
    std::vector<std::int64_t> xs(count);
    for (auto& x : xs) x = static_cast<std::int64_t>(uniform_below(rng, std::uint64_t(bound) + 1));
    std::sort(xs.begin(), xs.end());
    std::vector<std::int64_t> out;
    out.reserve(count);
    std::int64_t up = xs.front(), down = xs.front();
    for (std::size_t i = 1; i + 1 < count; ++i) {
        if (rng() & 1) {
            out.push_back(xs[i] - up);
            up = xs[i];
        } else {
            out.push_back(down - xs[i]);
            down = xs[i];
        }
    }
    out.push_back(xs.back() - up);
    out.push_back(down - xs.back());
    return out;
}

std::vector<Point> attempt(std::size_t n, std::size_t count, std::int64_t bound, std::mt19937_64& rng) {
    const std::vector<std::int64_t> dx = increments(count, bound, rng);
    std::vector<std::int64_t> dy = increments(count, bound, rng);
    shuffle(dy, rng);

    std::vector<Point> vecs;
    vecs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (dx[i] != 0 || dy[i] != 0) vecs.push_back({dx[i], dy[i]});
    }
    std::sort(vecs.begin(), vecs.end(), angle_less);

    std::vector<Point> fused;
    fused.reserve(vecs.size());
    for (const Point& v : vecs) {
        if (!fused.empty() && same_direction(fused.back(), v)) {
            fused.back() = fused.back() + v;
        } else {
            fused.push_back(v);
        }
    }
    if (fused.size() > 1 && same_direction(fused.front(), fused.back())) {
        fused.front() = fused.front() + fused.back();
        fused.pop_back();
    }
    if (fused.size() < n) return {};

    // Merge the vector after each chosen gap into the one before it; distinct
    // gaps picked by a partial Fisher-Yates shuffle.
    const std::size_t surplus = fused.size() - n;
    if (surplus > 0) {
        std::vector<std::size_t> gaps(fused.size() - 1);
        for (std::size_t i = 0; i < gaps.size(); ++i) gaps[i] = i;
        std::vector<char> merge_next(fused.size(), 0);
        for (std::size_t i = 0; i < surplus; ++i) {
            std::swap(gaps[i], gaps[i + uniform_below(rng, gaps.size() - i)]);
            merge_next[gaps[i]] = 1;
        }
        std::vector<Point> merged;
        merged.reserve(n);
        for (std::size_t i = 0; i < fused.size(); ++i) {
            if (i > 0 && merge_next[i - 1]) {
                merged.back() = merged.back() + fused[i];
            } else {
                merged.push_back(fused[i]);
            }
        }
        fused.swap(merged);
    }

    std::vector<Point> pts;
    pts.reserve(n);
    Point p{0, 0};
    std::int64_t min_x = 0, min_y = 0;
    for (const Point& v : fused) {
        pts.push_back(p);
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        p = p + v;
    }
    for (Point& q : pts) q = q - Point{min_x, min_y};
    return pts;
}

}  // namespace

ConvexPolygon random_convex_polygon(std::size_t n, std::int64_t coord_bound, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorCode::TooFew, "need at least 3 vertices");
    if (coord_bound < 1 || coord_bound > kCoordinateBound) {
        throw Error(ErrorCode::InvalidInput, "coordinate bound must lie in [1, " + std::to_string(kCoordinateBound) + "]");
    }
    std::mt19937_64 rng(seed);
    std::size_t count = n + n / 16 + 8;
    for (std::size_t i = 0; i < kGeneratorAttempts; ++i) {
        const std::vector<Point> pts = attempt(n, count, coord_bound, rng);
        if (pts.size() != n) {
            count = std::min(count + count / 4 + 4, 8 * n + 64);
            continue;
        }
        try {
            return validate_convex_polygon(pts, Orientation::CCW);
        } catch (const Error&) {
        }
    }
    throw Error(ErrorCode::ResourceExhausted, "no strictly convex " + std::to_string(n) + "-gon within bound " +
                                                  std::to_string(coord_bound) + " after " +
                                                  std::to_string(kGeneratorAttempts) + " attempts");
}

}  // namespace maxtri
