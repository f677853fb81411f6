#include "maxtri/quadrilateral.hpp"

#include <stdexcept>

namespace maxtri {

QuadrilateralRun ds_quadrilateral(const ConvexPolygon& polygon, std::size_t root) {
    const std::size_t n = polygon.size();
    if (n < 4) throw Error(ErrorCode::InvalidInput, "the quadrilateral walk needs n >= 4");
    if (root >= n) throw Error(ErrorCode::InvalidInput, "root out of range");

    auto next = [&](std::size_t v) { return polygon.next(v); };
    auto area = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        return DoubledArea{cross(polygon[c] - polygon[a], polygon[d] - polygon[b])};
    };

    QuadrilateralRun run;
    RunTrace& trace = run.trace;
    const std::size_t budget = 64 * n + 64;
    std::size_t moves = 0;
    std::size_t a = root, b = next(a), c = next(b), d = next(c);
    auto move = [&](char name, std::size_t& ptr, std::size_t to) {
        const std::size_t from = ptr;
        ptr = to;
        trace.steps.push_back({name, from, to, area(a, b, c, d)});
        if (++moves > budget) throw std::logic_error("ds_quadrilateral exceeded its step budget");
    };

    DoubledArea m = area(a, b, c, d);
    IndexTuple best{a, b, c, d};
    trace.best_so_far.push_back({best, m});

    while (true) {
        while (area(a, b, c, d) <= area(a, b, c, next(d))) {
            move('d', d, next(d));
            while (area(a, b, c, d) <= area(a, b, next(c), d)) {
                move('c', c, next(c));
            }
            while (area(a, b, c, d) <= area(a, next(b), c, d)) {
                move('b', b, next(b));
            }
        }
        if (area(a, b, c, d) > m) {
            m = area(a, b, c, d);
            best = IndexTuple{a, b, c, d};
            trace.best_so_far.push_back({best, m});
        }
        move('a', a, next(a));
        if (a == root) break;
        if (b == a) {
            move('b', b, next(b));
            if (c == b) {
                move('c', c, next(c));
                if (d == c) move('d', d, next(d));
            }
        }
    }
    run.quadrilateral = std::move(best);
    return run;
}

}  // namespace maxtri
