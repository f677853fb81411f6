#include "maxtri/oracle.hpp"

#include <array>

namespace maxtri {

namespace {

template <std::size_t K>
std::int64_t shoelace(const ConvexPolygon& p, const std::array<std::size_t, K>& idx) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < K; ++i) {
        const Point& u = p[idx[i]];
        const Point& v = p[idx[(i + 1) % K]];
        sum += u.x * v.y - u.y * v.x;
    }
    return sum;
}

}  // namespace

IndexTuple brute_force_max_kgon(const ConvexPolygon& polygon, std::size_t k) {
    const std::size_t n = polygon.size();
    if (k != 3 && k != 4) throw Error(ErrorCode::InvalidInput, "oracle supports k = 3 and k = 4 only");
    if (n < k) throw Error(ErrorCode::InvalidInput, "polygon has fewer than k vertices");

    if (k == 3) {
        std::array<std::size_t, 3> best{0, 1, 2};
        std::int64_t best_area = shoelace(polygon, best);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t l = j + 1; l < n; ++l) {
                    const std::array<std::size_t, 3> t{i, j, l};
                    const std::int64_t a = shoelace(polygon, t);
                    if (a > best_area) {
                        best_area = a;
                        best = t;
                    }
                }
        return IndexTuple{best[0], best[1], best[2]};
    }

    std::array<std::size_t, 4> best{0, 1, 2, 3};
    std::int64_t best_area = shoelace(polygon, best);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l)
                for (std::size_t m = l + 1; m < n; ++m) {
                    const std::array<std::size_t, 4> t{i, j, l, m};
                    const std::int64_t a = shoelace(polygon, t);
                    if (a > best_area) {
                        best_area = a;
                        best = t;
                    }
                }
    return IndexTuple{best[0], best[1], best[2], best[3]};
}

}  // namespace maxtri
