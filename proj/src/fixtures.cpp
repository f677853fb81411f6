#include <algorithm>

#include "maxtri/io.hpp"
#include "maxtri/oracle.hpp"
#include "maxtri/quadrilateral.hpp"
#include "maxtri/stability.hpp"

namespace maxtri {

namespace {

constexpr std::string_view kTriangle9 =
    "# Nine-point counter-example for the linear-time triangle walk.\n"
    "# Vertices in hull order, counter-clockwise, starting at the\n"
    "# lexicographically smallest point.\n"
    "#   index label\n"
    "#   0 b1\n"
    "#   1 b0\n"
    "#   2 c1\n"
    "#   3 a2\n"
    "#   4 c0\n"
    "#   5 a1\n"
    "#   6 b2\n"
    "#   7 a0\n"
    "#   8 c2\n"
    "n 9 CCW\n"
    "759 2927\n"
    "1000 1000\n"
    "1213 691\n"
    "3383 413\n"
    "5000 1000\n"
    "4752 4262\n"
    "4745 4322\n"
    "3040 4460\n"
    "2506 4423\n";

constexpr std::string_view kQuad16 =
    "# Sixteen-point counter-example for the quadrilateral walk.\n"
    "# Points in listed order a1 ... a16 (index i holds a(i+1)).\n"
    "n 16 CCW\n"
    "26096 6750\n"
    "26130 9933\n"
    "25940 10728\n"
    "23090 22189\n"
    "18106 23681\n"
    "13484 24407\n"
    "13174 24343\n"
    "3090 22189\n"
    "0 17308\n"
    "80 14350\n"
    "323 13331\n"
    "3090 2189\n"
    "8459 385\n"
    "12837 0\n"
    "13392 114\n"
    "23090 2189\n";

std::string labelled(Fixture f, const IndexTuple& t) {
    std::string s = "{";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += fixture_labels(f)[t[i]];
    }
    return s + "}";
}

}  // namespace

std::string_view fixture_text(Fixture f) { return f == Fixture::Triangle9 ? kTriangle9 : kQuad16; }

const std::vector<std::string>& fixture_labels(Fixture f) {
    static const std::vector<std::string> tri{"b1", "b0", "c1", "a2", "c0", "a1", "b2", "a0", "c2"};
    static const std::vector<std::string> quad = [] {
        std::vector<std::string> v;
        for (int i = 1; i <= 16; ++i) v.push_back("a" + std::to_string(i));
        return v;
    }();
    return f == Fixture::Triangle9 ? tri : quad;
}

std::optional<Fixture> fixture_by_name(std::string_view name) {
    if (name == "fixture9") return Fixture::Triangle9;
    if (name == "fixture16") return Fixture::Quad16;
    return std::nullopt;
}

std::size_t fixture_index(Fixture f, std::string_view label) {
    const auto& labels = fixture_labels(f);
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw Error(ErrorCode::InvalidInput, "unknown fixture label '" + std::string(label) + "'");
    return static_cast<std::size_t>(it - labels.begin());
}

IndexTuple fixture_tuple(Fixture f, std::initializer_list<std::string_view> labels) {
    std::vector<std::size_t> v;
    for (auto l : labels) v.push_back(fixture_index(f, l));
    return IndexTuple(std::move(v));
}

std::vector<FixtureCheck> verify_fixtures() {
    std::vector<FixtureCheck> out;
    auto check = [&](std::string name, bool pass, std::string detail) {
        out.push_back({std::move(name), pass, std::move(detail)});
    };

    {
        const Fixture f = Fixture::Triangle9;
        const PolygonFile file = parse_polygon_file(fixture_text(f));
        const ConvexPolygon& p = file.polygon;
        check("triangle9 hull order", canonical_cyclic_order(file.points) == p, "file order equals the recovered CCW cycle");

        const IndexTuple opt = brute_force_max_kgon(p, 3);
        const IndexTuple want_opt = fixture_tuple(f, {"a0", "b0", "c0"});
        check("triangle9 optimum", opt == want_opt, "oracle " + labelled(f, opt) + ", expected " + labelled(f, want_opt));

        const IndexTuple want_ds = fixture_tuple(f, {"c0", "c1", "c2"});
        std::size_t agree = 0;
        for (std::size_t r = 0; r < p.size(); ++r) agree += ds_triangle(p, r).triangle == want_ds;
        check("triangle9 walk output", agree == p.size(),
              std::to_string(agree) + "/" + std::to_string(p.size()) + " roots report " + labelled(f, want_ds));

        const DoubledArea best = doubled_area(p, opt);
        const DoubledArea got = doubled_area(p, want_ds);
        check("triangle9 deficit", best > got,
              "oracle " + best.to_string() + " vs walk " + got.to_string() + ", deficit " + (best - got).to_string());

        const RunTrace trace = ds_triangle(p, 0).trace;
        bool monotone = true;
        for (std::size_t i = 1; i < trace.best_so_far.size(); ++i) {
            monotone = monotone && trace.best_so_far[i - 1].area <= trace.best_so_far[i].area;
        }
        const DoubledArea last = trace.best_so_far.back().area;
        check("triangle9 trace", monotone && last < best,
              std::string(monotone ? "non-decreasing" : "decreasing") + " checkpoints ending at " + last.to_string());

        check("triangle9 corrected", doubled_area(p, quadratic_triangle(p)) == best && doubled_area(p, dnc_triangle(p)) == best,
              "quadratic and dnc reach " + best.to_string());
    }

    {
        const Fixture f = Fixture::Quad16;
        const PolygonFile file = parse_polygon_file(fixture_text(f));
        const ConvexPolygon& p = file.polygon;
        check("quad16 convex in listed order", p.size() == 16, "validated as a strictly convex CCW cycle");

        const IndexTuple opt = brute_force_max_kgon(p, 4);
        const IndexTuple want_opt = fixture_tuple(f, {"a4", "a8", "a12", "a16"});
        check("quad16 optimum", opt == want_opt, "oracle " + labelled(f, opt) + ", expected " + labelled(f, want_opt));

        const IndexTuple want_ds = fixture_tuple(f, {"a1", "a4", "a8", "a12"});
        std::size_t agree = 0;
        for (std::size_t r = 0; r < p.size(); ++r) agree += ds_quadrilateral(p, r).quadrilateral == want_ds;
        check("quad16 walk output", agree == p.size(),
              std::to_string(agree) + "/" + std::to_string(p.size()) + " roots report " + labelled(f, want_ds));

        const DoubledArea best = doubled_area(p, opt);
        const DoubledArea got = doubled_area(p, want_ds);
        check("quad16 deficit", best > got,
              "oracle " + best.to_string() + " vs walk " + got.to_string() + ", deficit " + (best - got).to_string());
        check("quad16 walk output not 4-stable", !is_k_stable(p, want_ds), labelled(f, want_ds));
    }
    return out;
}

}  // namespace maxtri
