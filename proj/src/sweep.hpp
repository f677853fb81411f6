#pragma once
// Rooted two-pointer sweeps over a CCW vertex span. Offsets are measured
// counter-clockwise from the root, so offset 0 is the root itself.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "maxtri/geometry.hpp"

namespace maxtri::detail {

struct RootedBest {
    std::size_t b = 1;  // offset of the middle vertex
    std::size_t c = 2;  // offset of the far vertex
    std::int64_t area = 0;
};

class RootedView {
public:
    RootedView(std::span<const Point> pts, std::size_t root) : pts_(pts), root_(root), apex_(pts[root]) {}

    std::size_t size() const { return pts_.size(); }
    std::size_t index(std::size_t offset) const {
        const std::size_t i = root_ + offset;
        return i >= pts_.size() ? i - pts_.size() : i;
    }
    const Point& at(std::size_t offset) const { return pts_[index(offset)]; }
    std::int64_t area(std::size_t b, std::size_t c) const { return cross(at(b) - apex_, at(c) - apex_); }
    Point from_root(std::size_t offset) const { return at(offset) - apex_; }

private:
    std::span<const Point> pts_;
    std::size_t root_;
    Point apex_;
};

// Largest triangle containing q[0], where q[0..n) is the polygon read CCW from
// the root. The far pointer never moves backwards while the middle pointer
// advances; the first strict maximum wins.
inline RootedBest largest_rooted_run(const Point* q, std::size_t n) {
    const Point apex = q[0];
    RootedBest best{1, 2, cross(q[1] - apex, q[2] - apex)};
    std::size_t c = 2;
    for (std::size_t b = 1; b + 1 < n; ++b) {
        if (c <= b) c = b + 1;
        const Point ab = q[b] - apex;
        while (c + 1 < n && cross(ab, q[c + 1] - q[c]) >= 0) ++c;
        const std::int64_t area = cross(ab, q[c] - apex);
        if (area > best.area) best = {b, c, area};
    }
    return best;
}

inline RootedBest largest_rooted(std::span<const Point> pts, std::size_t root) {
    if (root == 0) return largest_rooted_run(pts.data(), pts.size());
    std::vector<Point> rotated(pts.begin() + static_cast<std::ptrdiff_t>(root), pts.end());
    rotated.insert(rotated.end(), pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(root));
    return largest_rooted_run(rotated.data(), rotated.size());
}

}  // namespace maxtri::detail
