#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maxtri/fuzz.hpp"
#include "maxtri/io.hpp"
#include "maxtri/oracle.hpp"
#include "maxtri/random_polygon.hpp"
#include "maxtri/stability.hpp"
#include "support.hpp"

using namespace maxtri;

TEST_CASE("oracle on the bundled fixtures") {
    const ConvexPolygon p9 = parse_polygon_file(fixture_text(Fixture::Triangle9)).polygon;
    CHECK(brute_force_max_kgon(p9, 3) == fixture_tuple(Fixture::Triangle9, {"a0", "b0", "c0"}));
    const ConvexPolygon p16 = parse_polygon_file(fixture_text(Fixture::Quad16)).polygon;
    CHECK(brute_force_max_kgon(p16, 4) == fixture_tuple(Fixture::Quad16, {"a4", "a8", "a12", "a16"}));
}

TEST_CASE("oracle trivial inputs and errors") {
    const ConvexPolygon tri = validate_convex_polygon(std::vector<Point>{{0, 0}, {3, 0}, {0, 3}}, Orientation::CCW);
    CHECK(brute_force_max_kgon(tri, 3) == IndexTuple{0, 1, 2});
    CHECK_THROWS_AS(brute_force_max_kgon(tri, 4), Error);
    const ConvexPolygon quad = validate_convex_polygon(std::vector<Point>{{0, 0}, {3, 0}, {3, 3}, {0, 3}}, Orientation::CCW);
    CHECK(brute_force_max_kgon(quad, 4) == IndexTuple{0, 1, 2, 3});
    // All four triangles tie; the lexicographically first wins.
    CHECK(brute_force_max_kgon(quad, 3) == IndexTuple{0, 1, 2});
    CHECK_THROWS_AS(brute_force_max_kgon(quad, 5), Error);
}

TEST_CASE("oracle agrees with the fan formula and is stable") {
    for (const ConvexPolygon& p : support::random_corpus(80, 4, 24, 1'000'000, 50)) {
        const IndexTuple t3 = brute_force_max_kgon(p, 3);
        CHECK(support::area_of(p, t3) == support::best_triangle_area(p));
        CHECK(is_3_stable(p, t3));
        const IndexTuple t4 = brute_force_max_kgon(p, 4);
        CHECK(support::area_of(p, t4) == support::best_quad_area(p));
        CHECK(is_k_stable(p, t4));
    }
}

TEST_CASE("random polygons") {
    for (std::size_t n : {3, 4, 5, 17, 64, 300}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const ConvexPolygon p = random_convex_polygon(n, 1'000'000, seed);
            CHECK(p.size() == n);
            for (const Point& q : p.vertices()) {
                CHECK(q.x >= 0);
                CHECK(q.y >= 0);
                CHECK(q.x <= 1'000'000);
                CHECK(q.y <= 1'000'000);
            }
            CHECK_NOTHROW(validate_convex_polygon(p.vertices(), Orientation::CCW));
        }
    }
    CHECK(random_convex_polygon(32, 1'000'000, 9) == random_convex_polygon(32, 1'000'000, 9));
    CHECK_FALSE(random_convex_polygon(32, 1'000'000, 9) == random_convex_polygon(32, 1'000'000, 10));
}

TEST_CASE("random polygon generator limits") {
    try {
        random_convex_polygon(60, 4, 1);
        FAIL("expected ResourceExhausted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ResourceExhausted);
    }
    CHECK_THROWS_AS(random_convex_polygon(2, 100, 1), Error);
    CHECK_THROWS_AS(random_convex_polygon(10, kCoordinateBound + 1, 1), Error);
    CHECK(random_convex_polygon(3, 1, 4).size() == 3);
}

TEST_CASE("uniform_below stays in range and covers it") {
    std::mt19937_64 rng(1);
    std::vector<int> seen(7, 0);
    for (int i = 0; i < 7000; ++i) {
        const auto v = uniform_below(rng, 7);
        REQUIRE(v < 7);
        ++seen[v];
    }
    for (int c : seen) CHECK(c > 800);
}

TEST_CASE("fuzzing the corrected algorithms finds nothing") {
    FuzzConfig cfg;
    cfg.trials = 300;
    cfg.n_min = 4;
    cfg.n_max = 64;
    cfg.seed = 77;
    const FuzzReport r = differential_fuzz(cfg);
    CHECK(r.trials_run == 300);
    CHECK(r.failures.empty());
    CHECK_FALSE(r.corrected_failures());
    REQUIRE(r.stats.size() == 2);
    CHECK(r.stats[0].runs == 300);
}

TEST_CASE("fixture corpus exposes the triangle walk") {
    FuzzConfig cfg;
    cfg.targets = {Target::Ds};
    cfg.corpus = {parse_polygon_file(fixture_text(Fixture::Triangle9)).polygon};
    cfg.shrink = true;
    const FuzzReport r = differential_fuzz(cfg);
    REQUIRE(r.failures.size() == 1);
    const FuzzFailure& f = r.failures[0];
    CHECK(f.deficit.value() > 0);
    CHECK(f.deficit == f.oracle_area - f.target_area);
    CHECK_FALSE(f.seed.has_value());
    CHECK_FALSE(r.corrected_failures());
    REQUIRE(f.shrunk.has_value());
    CHECK(f.shrunk->size() <= 9);
    CHECK(f.shrunk->size() >= 3);
    // The shrunk polygon still fails.
    const ConvexPolygon& s = *f.shrunk;
    CHECK(support::area_of(s, ds_triangle(s, 0).triangle) < support::best_triangle_area(s));
}

TEST_CASE("quadrilateral fuzzing records replayable failures") {
    FuzzConfig cfg;
    cfg.k = 4;
    cfg.targets = {Target::DsQuad};
    cfg.trials = 60;
    cfg.n_min = 5;
    cfg.n_max = 20;
    cfg.seed = 5;
    const FuzzReport r = differential_fuzz(cfg);
    REQUIRE_FALSE(r.failures.empty());
    for (const FuzzFailure& f : r.failures) {
        REQUIRE(f.seed.has_value());
        CHECK(*f.seed == trial_seed(cfg.seed, f.trial));
        const ConvexPolygon replay = trial_polygon(*f.seed, cfg.n_min, cfg.n_max, cfg.coord_bound);
        CHECK(replay == f.polygon);
        CHECK(run_target(f.target, replay) == f.target_tuple);
    }
}

TEST_CASE("fuzz reports are deterministic and independent of threads") {
    FuzzConfig cfg;
    cfg.trials = 200;
    cfg.n_min = 6;
    cfg.n_max = 30;
    cfg.seed = 123;
    cfg.targets = {Target::Ds, Target::Quadratic, Target::Dnc};
    const std::string a = to_json(differential_fuzz(cfg));
    const std::string b = to_json(differential_fuzz(cfg));
    cfg.threads = 4;
    const std::string c = to_json(differential_fuzz(cfg));
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("fuzz config checks") {
    FuzzConfig cfg;
    cfg.k = 4;
    CHECK_THROWS_AS(differential_fuzz(cfg), Error);  // triangle targets with k = 4
    cfg = {};
    cfg.n_min = 2;
    CHECK_THROWS_AS(differential_fuzz(cfg), Error);
    cfg = {};
    cfg.n_max = 3;
    CHECK_THROWS_AS(differential_fuzz(cfg), Error);
    cfg = {};
    cfg.trials = 0;
    CHECK_THROWS_AS(differential_fuzz(cfg), Error);
    cfg = {};
    cfg.coord_bound = kCoordinateBound + 1;
    CHECK_THROWS_AS(differential_fuzz(cfg), Error);
    CHECK(parse_target("ds-quad") == Target::DsQuad);
    CHECK_THROWS_AS(parse_target("fast"), Error);
}

TEST_CASE("generator exhaustion propagates out of the campaign") {
    FuzzConfig cfg;
    cfg.trials = 3;
    cfg.n_min = 60;
    cfg.n_max = 60;
    cfg.coord_bound = 4;
    try {
        differential_fuzz(cfg);
        FAIL("expected ResourceExhausted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ResourceExhausted);
    }
}
