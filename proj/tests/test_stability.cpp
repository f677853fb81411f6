#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "maxtri/oracle.hpp"
#include "maxtri/stability.hpp"
#include "support.hpp"

using namespace maxtri;

namespace {

ConvexPolygon regular_ish(std::size_t n) {
    // Lattice points on a large circle, enough for strict convexity.
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = 6.283185307179586 * double(i) / double(n);
        pts.push_back({std::llround(100000 * std::cos(a)), std::llround(100000 * std::sin(a))});
    }
    return validate_convex_polygon(pts, Orientation::CCW);
}

}  // namespace

TEST_CASE("interleaving on a hexagon") {
    const ConvexPolygon p = regular_ish(6);
    CHECK(interleaves(IndexTuple{0, 2, 4}, IndexTuple{1, 3, 5}, p));
    CHECK(interleaves(IndexTuple{0, 2, 4}, IndexTuple{0, 2, 4}, p));
    // Coinciding vertices count.
    CHECK(interleaves(IndexTuple{0, 2, 4}, IndexTuple{0, 3, 5}, p));
    CHECK_FALSE(interleaves(IndexTuple{0, 1, 2}, IndexTuple{3, 4, 5}, p));
    CHECK_THROWS_AS(interleaves(IndexTuple{0, 1, 2}, IndexTuple{0, 1, 2, 3}, p), Error);
}

TEST_CASE("stability predicates match the brute-force definitions") {
    for (const ConvexPolygon& p : support::random_corpus(40, 3, 16, 1'000'000, 3)) {
        for (const IndexTuple& t : support::all_triangles(p)) {
            CHECK(is_3_stable(p, t) == support::naive_3_stable(p, t));
            CHECK(is_k_stable(p, t) == support::naive_3_stable(p, t));
            for (std::size_t r : t) CHECK(is_2_stable(p, t, r) == support::naive_2_stable(p, t, r));
        }
    }
}

TEST_CASE("2-stability needs the root in the triangle") {
    const ConvexPolygon p = regular_ish(7);
    CHECK_THROWS_AS(is_2_stable(p, IndexTuple{0, 2, 4}, 1), Error);
    CHECK_THROWS_AS(is_3_stable(p, IndexTuple{0, 2, 4, 5}), Error);
    CHECK_THROWS_AS(is_k_stable(p, IndexTuple{0, 2}), Error);
}

TEST_CASE("k-stability of quadrilaterals against single replacements") {
    for (const ConvexPolygon& p : support::random_corpus(20, 4, 12, 1'000'000, 8)) {
        const std::size_t n = p.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    for (std::size_t l = k + 1; l < n; ++l) {
                        const IndexTuple q{i, j, k, l};
                        const std::int64_t area = support::area_of(p, q);
                        bool stable = true;
                        for (std::size_t slot = 0; slot < 4 && stable; ++slot) {
                            for (std::size_t w = 0; w < n && stable; ++w) {
                                if (q.contains(w)) continue;
                                std::vector<std::size_t> v(q.begin(), q.end());
                                v[slot] = w;
                                if (support::area_of(p, IndexTuple(v)) > area) stable = false;
                            }
                        }
                        CHECK(is_k_stable(p, q) == stable);
                    }
    }
}

TEST_CASE("rooted 2-stable enumeration equals the brute-force filter") {
    for (const ConvexPolygon& p : support::random_corpus(60, 3, 40, 1'000'000, 4)) {
        for (std::size_t r = 0; r < p.size(); ++r) {
            std::set<IndexTuple> expect;
            for (const IndexTuple& t : support::all_triangles(p)) {
                if (t.contains(r) && support::naive_2_stable(p, t, r)) expect.insert(t);
            }
            const StableTriangleSet got = enumerate_2_stable_rooted(p, r);
            CHECK(got.root == r);
            CHECK(std::set<IndexTuple>(got.triangles.begin(), got.triangles.end()) == expect);
            CHECK(got.triangles.size() == expect.size());
            CHECK(got.triangles.size() <= p.size());
        }
    }
}

TEST_CASE("rooted enumeration on degenerate-tie lattice polygons") {
    std::size_t checked = 0;
    support::for_each_lattice_polygon(4, 8, [&](const ConvexPolygon& p) {
        for (std::size_t r = 0; r < p.size(); ++r) {
            std::set<IndexTuple> expect;
            for (const IndexTuple& t : support::all_triangles(p)) {
                if (t.contains(r) && support::naive_2_stable(p, t, r)) expect.insert(t);
            }
            const auto got = enumerate_2_stable_rooted(p, r).triangles;
            CHECK(std::set<IndexTuple>(got.begin(), got.end()) == expect);
            ++checked;
        }
    });
    CHECK(checked > 0);
}

TEST_CASE("largest rooted triangle") {
    for (const ConvexPolygon& p : support::random_corpus(60, 3, 40, 1'000'000, 5)) {
        std::int64_t global = 0;
        for (std::size_t r = 0; r < p.size(); ++r) {
            std::int64_t best = 0;
            for (const IndexTuple& t : support::all_triangles(p)) {
                if (t.contains(r)) best = std::max(best, support::area_of(p, t));
            }
            const IndexTuple got = largest_rooted_triangle(p, r);
            CHECK(got.contains(r));
            CHECK(support::area_of(p, got) == best);
            global = std::max(global, best);
        }
        CHECK(global == support::best_triangle_area(p));
    }
}

TEST_CASE("3-stable enumeration equals the brute-force filter") {
    for (const ConvexPolygon& p : support::random_corpus(60, 3, 40, 1'000'000, 6)) {
        std::vector<IndexTuple> expect;
        for (const IndexTuple& t : support::all_triangles(p)) {
            if (support::naive_3_stable(p, t)) expect.push_back(t);
        }
        CHECK(enumerate_3_stable(p) == expect);
        CHECK(is_3_stable(p, brute_force_max_kgon(p, 3)));
    }
}

TEST_CASE("structural lemmas on random polygons") {
    for (const ConvexPolygon& p : support::random_corpus(100, 3, 48, 1'000'000, 7)) {
        for (std::size_t r = 0; r < p.size(); ++r) {
            const auto ts = enumerate_2_stable_rooted(p, r).triangles;
            for (std::size_t i = 0; i < ts.size(); ++i)
                for (std::size_t j = i + 1; j < ts.size(); ++j) CHECK(interleaves(ts[i], ts[j], p));
        }
        const auto s3 = enumerate_3_stable(p);
        for (std::size_t i = 0; i < s3.size(); ++i)
            for (std::size_t j = i + 1; j < s3.size(); ++j) CHECK(interleaves(s3[i], s3[j], p));
    }
}
