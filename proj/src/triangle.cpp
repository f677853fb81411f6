#include "maxtri/triangle.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <numeric>
#include <stdexcept>

#include "sweep.hpp"

namespace maxtri {

namespace {

constexpr std::size_t kParallelCutoff = std::size_t{1} << 14;

// Moves a walk may make before we assume its control flow is broken.
std::size_t step_budget(std::size_t n) { return 64 * n + 64; }

}  // namespace

TriangleRun ds_triangle(const ConvexPolygon& polygon, std::size_t root) {
    const std::size_t n = polygon.size();
    if (root >= n) throw Error(ErrorCode::InvalidInput, "root out of range");

    // Clockwise successor of the CCW-stored polygon.
    auto next = [&](std::size_t v) { return polygon.prev(v); };
    // Doubled area of abc taken in clockwise order.
    auto area = [&](std::size_t a, std::size_t b, std::size_t c) {
        return DoubledArea{-cross(polygon[b] - polygon[a], polygon[c] - polygon[a])};
    };

    TriangleRun run;
    RunTrace& trace = run.trace;
    std::size_t moves = 0;
    auto move = [&](char name, std::size_t& ptr, std::size_t to, DoubledArea after) {
        trace.steps.push_back({name, ptr, to, after});
        ptr = to;
        if (++moves > step_budget(n)) throw std::logic_error("ds_triangle exceeded its step budget");
    };

    std::size_t a = root;
    std::size_t b = next(a);
    std::size_t c = next(b);
    DoubledArea m = area(a, b, c);
    IndexTuple best{a, b, c};
    trace.best_so_far.push_back({best, m});

    while (true) {
        while (area(a, b, next(c)) >= area(a, b, c) || area(a, next(b), c) >= area(a, b, c)) {
            if (area(a, b, next(c)) >= area(a, b, c)) {
                move('c', c, next(c), area(a, b, next(c)));
            }
            if (area(a, next(b), c) >= area(a, b, c)) {
                move('b', b, next(b), area(a, next(b), c));
            }
        }
        if (area(a, b, c) >= m) {
            m = area(a, b, c);
            best = IndexTuple{a, b, c};
            trace.best_so_far.push_back({best, m});
        }
        const std::size_t a_next = next(a);
        move('a', a, a_next, a_next == b || a_next == c ? DoubledArea{0} : area(a_next, b, c));
        if (a == root) break;
    }
    run.triangle = std::move(best);
    return run;
}

IndexTuple quadratic_triangle(const ConvexPolygon& polygon) {
    const std::size_t n = polygon.size();
    if (n < 3) throw Error(ErrorCode::TooFew, "need at least 3 vertices");
    // Two laps back to back: every root sees its n-vertex run without wrapping.
    std::vector<Point> laps(polygon.vertices().begin(), polygon.vertices().end());
    laps.insert(laps.end(), polygon.vertices().begin(), polygon.vertices().end());
    detail::RootedBest best;
    std::size_t best_root = 0;
    best.area = -1;
    for (std::size_t a = 0; a < n; ++a) {
        const detail::RootedBest r = detail::largest_rooted_run(laps.data() + a, n);
        if (r.area > best.area) {
            best = r;
            best_root = a;
        }
    }
    const detail::RootedView v(polygon.vertices(), best_root);
    return IndexTuple{best_root, v.index(best.b), v.index(best.c)};
}

std::size_t split_part_limit(std::size_t n) { return (5 * (n + 6) + 5) / 6; }

namespace {

using Triple = std::array<std::size_t, 3>;  // ascending local indices

std::size_t gap(std::size_t u, std::size_t v, std::size_t n) { return (v + n - u) % n; }

bool in_closed(std::size_t p, std::size_t u, std::size_t v, std::size_t n) { return gap(u, p, n) <= gap(u, v, n); }

bool triples_interleave(const Triple& s, const Triple& t, std::size_t n) {
    auto covers = [n](const Triple& x, const Triple& y) {
        for (std::size_t i = 0; i < 3; ++i) {
            const std::size_t u = x[i], v = x[(i + 1) % 3];
            if (!std::any_of(y.begin(), y.end(), [&](std::size_t w) { return in_closed(w, u, v, n); })) return false;
        }
        return true;
    };
    return covers(s, t) && covers(t, s);
}

std::size_t median_local(std::size_t n, const Triple& ta) {
    std::size_t best_len = 0, best_start = ta[0];
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t len = gap(ta[i], ta[(i + 1) % 3], n);
        if (len > best_len) {
            best_len = len;
            best_start = ta[i];
        }
    }
    return (best_start + best_len / 2) % n;
}

// A part is a union of runs of consecutive local indices, kept ascending.
struct Range {
    std::size_t first = 0;
    std::size_t last = 0;  // inclusive
};

struct PartRanges {
    std::array<Range, 16> runs{};
    std::size_t count = 0;
    std::size_t size = 0;

    void add(std::size_t first, std::size_t last) {
        runs[count++] = {first, last};
        size += last - first + 1;
    }
};

struct LocalSplit {
    std::array<PartRanges, 6> parts{};
    std::size_t count = 0;
    bool interleaving = false;
};

// Bit (i * 3 + j): the atom may host a vertex lying in interval i of ta and
// interval j of tm.
using LabelMask = std::uint16_t;

LabelMask point_labels(std::size_t p, const Triple& ta, const Triple& tm, std::size_t n) {
    LabelMask mask = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!in_closed(p, ta[i], ta[(i + 1) % 3], n)) continue;
        for (std::size_t j = 0; j < 3; ++j) {
            if (in_closed(p, tm[j], tm[(j + 1) % 3], n)) mask |= LabelMask(1u << (i * 3 + j));
        }
    }
    return mask;
}

// Label triples a compatible atom triple must realize: (i, s(i)) for every
// permutation s of the tm intervals.
constexpr std::array<Triple, 6> kLabelTriples{{{0, 4, 8}, {0, 5, 7}, {1, 3, 8}, {1, 5, 6}, {2, 3, 7}, {2, 4, 6}}};

LocalSplit split_local(std::size_t n, const Triple& ta, const Triple& tm) {
    std::array<std::size_t, 6> cuts{ta[0], ta[1], ta[2], tm[0], tm[1], tm[2]};
    std::sort(cuts.begin(), cuts.end());
    const std::size_t k = static_cast<std::size_t>(std::unique(cuts.begin(), cuts.end()) - cuts.begin());

    struct Atom {
        bool interval;
        std::size_t from, to;  // split point: from == to; interval: open (from, to)
        LabelMask labels;
    };
    std::array<Atom, 12> atoms{};
    std::size_t count = 0;
    for (std::size_t h = 0; h < k; ++h) {
        const std::size_t u = cuts[h], v = cuts[(h + 1) % k];
        atoms[count++] = {false, u, u, point_labels(u, ta, tm, n)};
        if (gap(u, v, n) >= 2) atoms[count++] = {true, u, v, point_labels((u + 1) % n, ta, tm, n)};
    }

    std::array<std::size_t, 12> parent{};
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::array<bool, 12> used{};

    // A compatible triple gives each label of some label triple to a
    // different atom.
    for (const Triple& labels : kLabelTriples) {
        std::array<std::array<std::size_t, 12>, 3> carriers;
        std::array<std::size_t, 3> sizes{};
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t id = 0; id < count; ++id) {
                if (atoms[id].labels >> labels[i] & 1) carriers[i][sizes[i]++] = id;
            }
        }
        for (std::size_t xi = 0; xi < sizes[0]; ++xi) {
            const std::size_t x = carriers[0][xi];
            for (std::size_t yi = 0; yi < sizes[1]; ++yi) {
                const std::size_t y = carriers[1][yi];
                if (y == x) continue;
                for (std::size_t zi = 0; zi < sizes[2]; ++zi) {
                    const std::size_t z = carriers[2][zi];
                    if (z == x || z == y) continue;
                    std::size_t group = count;
                    for (std::size_t id : {x, y, z}) {
                        if (!atoms[id].interval) continue;
                        used[id] = true;
                        if (group == count) {
                            group = id;
                        } else {
                            parent[find(id)] = find(group);
                        }
                    }
                }
            }
        }
    }

    LocalSplit out;
    out.interleaving = triples_interleave(ta, tm, n);
    // Components in order of their first interval; each becomes one part.
    std::array<std::size_t, 12> part_of{};
    std::array<std::size_t, 12> root_part{};
    root_part.fill(count);
    for (std::size_t id = 0; id < count; ++id) {
        part_of[id] = count;
        if (!used[id]) continue;
        const std::size_t r = find(id);
        if (root_part[r] == count) root_part[r] = out.count++;
        part_of[id] = root_part[r];
    }
    if (out.count == 0) out.count = 1;
    for (std::size_t p = 0; p < out.count; ++p) {
        PartRanges& part = out.parts[p];
        for (std::size_t id = 0; id < count; ++id) {
            const Atom& at = atoms[id];
            if (!at.interval) {
                part.add(at.from, at.from);
            } else if (part_of[id] == p) {
                if (at.to > at.from) {
                    part.add(at.from + 1, at.to - 1);
                } else {
                    if (at.from + 1 < n) part.add(at.from + 1, n - 1);
                    if (at.to > 0) part.add(0, at.to - 1);
                }
            }
        }
        std::sort(part.runs.begin(), part.runs.begin() + static_cast<std::ptrdiff_t>(part.count),
                  [](const Range& x, const Range& y) { return x.first < y.first; });
    }
    return out;
}

Triple rooted_triple(std::span<const Point> pts, std::size_t root) {
    const detail::RootedBest r = detail::largest_rooted(pts, root);
    const detail::RootedView v(pts, root);
    Triple t{root, v.index(r.b), v.index(r.c)};
    std::sort(t.begin(), t.end());
    return t;
}

Triple to_triple(const IndexTuple& t) { return {t[0], t[1], t[2]}; }

struct Candidate {
    Triple local{};
    std::int64_t area = -1;
};

Candidate brute_local(std::span<const Point> pts) {
    Candidate best;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const std::int64_t a = cross(pts[j] - pts[i], pts[k] - pts[i]);
                if (a > best.area) best = {{i, j, k}, a};
            }
    return best;
}

Candidate quadratic_local(std::span<const Point> pts) {
    const IndexTuple t = quadratic_triangle(ConvexPolygon::from_trusted(std::vector<Point>(pts.begin(), pts.end())));
    return {to_triple(t), cross(pts[t[1]] - pts[t[0]], pts[t[2]] - pts[t[0]])};
}

class DncSolver {
public:
    explicit DncSolver(const DncOptions& opts) : opts_(opts) {}

    // `ids` maps local vertices to the caller's polygon. The returned triple
    // holds caller indices.
    Candidate solve(std::span<const Point> pts, std::span<const std::size_t> ids, std::size_t depth) {
        const std::size_t n = pts.size();
        if (n <= 5) return lift(brute_local(pts), ids);

        const Triple ta = rooted_triple(pts, 0);
        const std::size_t m = median_local(n, ta);
        const Triple tm = rooted_triple(pts, m);
        const LocalSplit split = split_local(n, ta, tm);

        bool violation = split.count > 2;
        bool fallback = false;
        std::size_t total = 0;
        for (std::size_t p = 0; p < split.count; ++p) {
            const std::size_t size = split.parts[p].size;
            total += size;
            if (size > split_part_limit(n)) violation = true;
            if (size >= n) fallback = true;
        }
        if (split.count == 2 && total > n + 6) violation = true;
        if (opts_.stats) record(split, n, fallback, violation, depth);
        if (violation && opts_.check_split_bounds) {
            throw std::logic_error("split of a " + std::to_string(n) + "-gon breaks the part-size bounds");
        }
        if (fallback) return lift(n <= 64 ? brute_local(pts) : quadratic_local(pts), ids);

        // Children of this node live in the scratch buffers of the next depth;
        // deeper calls only touch deeper buffers.
        if (levels_.size() <= depth + 1) levels_.resize(depth + 2);
        Level& level = levels_[depth + 1];
        if (level.pts.size() < total) {
            level.pts.resize(total);
            level.ids.resize(total);
        }
        // Inner buffers keep their storage when `levels_` grows during recursion.
        Point* const child_pts_base = level.pts.data();
        std::size_t* const child_ids_base = level.ids.data();
        std::array<std::size_t, 7> offset{};
        for (std::size_t p = 0; p < split.count; ++p) {
            std::size_t at = offset[p];
            const PartRanges& part = split.parts[p];
            for (std::size_t r = 0; r < part.count; ++r) {
                for (std::size_t v = part.runs[r].first; v <= part.runs[r].last; ++v, ++at) {
                    child_pts_base[at] = pts[v];
                    child_ids_base[at] = ids[v];
                }
            }
            offset[p + 1] = at;
        }
        auto child_pts = [&](std::size_t p) {
            return std::span<const Point>(child_pts_base + offset[p], offset[p + 1] - offset[p]);
        };
        auto child_ids = [&](std::size_t p) {
            return std::span<const std::size_t>(child_ids_base + offset[p], offset[p + 1] - offset[p]);
        };

        std::array<Candidate, 6> results{};
        if (opts_.parallel && split.count == 2 && n >= kParallelCutoff) {
            auto right = std::async(std::launch::async, [&, depth] {
                DncSolver helper(opts_);
                return helper.solve(child_pts(1), child_ids(1), depth + 1);
            });
            results[0] = solve(child_pts(0), child_ids(0), depth + 1);
            results[1] = right.get();
        } else {
            for (std::size_t p = 0; p < split.count; ++p) results[p] = solve(child_pts(p), child_ids(p), depth + 1);
        }

        Candidate best;
        for (std::size_t p = 0; p < split.count; ++p) {
            if (results[p].area > best.area) best = results[p];
        }
        return best;
    }

private:
    struct Level {
        std::vector<Point> pts;
        std::vector<std::size_t> ids;
    };

    static Candidate lift(Candidate c, std::span<const std::size_t> ids) {
        for (std::size_t& v : c.local) v = ids[v];
        std::sort(c.local.begin(), c.local.end());
        return c;
    }

    void record(const LocalSplit& split, std::size_t n, bool fallback, bool violation, std::size_t depth) const {
        DncNode node;
        node.size = n;
        node.interleaving = split.interleaving;
        node.fallback = fallback;
        for (std::size_t p = 0; p < split.count; ++p) node.part_sizes.push_back(split.parts[p].size);
        std::lock_guard lock(opts_.stats->mutex);
        DncStats& s = *opts_.stats;
        if (violation) ++s.bound_violations;
        if (fallback) ++s.fallback_nodes;
        s.max_depth = std::max(s.max_depth, depth);
        s.nodes.push_back(std::move(node));
    }

    const DncOptions& opts_;
    std::vector<Level> levels_;
};

}  // namespace

std::size_t median_of_largest_interval(const ConvexPolygon& polygon, const IndexTuple& ta) {
    if (ta.size() != 3) throw Error(ErrorCode::InvalidInput, "expected a triangle");
    check_aligned(polygon, ta);
    return median_local(polygon.size(), to_triple(ta));
}

SubproblemSplit split_subproblems(const ConvexPolygon& polygon, const IndexTuple& ta, const IndexTuple& tm) {
    if (ta.size() != 3 || tm.size() != 3) {
        throw Error(ErrorCode::InvalidInput, "dividing triangles must have three vertices");
    }
    check_aligned(polygon, ta);
    check_aligned(polygon, tm);
    const LocalSplit local = split_local(polygon.size(), to_triple(ta), to_triple(tm));

    SubproblemSplit out;
    out.interleaving = local.interleaving;
    for (std::size_t p = 0; p < local.count; ++p) {
        const PartRanges& part = local.parts[p];
        std::vector<std::size_t> index;
        std::vector<Point> pts;
        for (std::size_t r = 0; r < part.count; ++r) {
            for (std::size_t v = part.runs[r].first; v <= part.runs[r].last; ++v) {
                index.push_back(v);
                pts.push_back(polygon[v]);
            }
        }
        out.parts.push_back({ConvexPolygon::from_trusted(std::move(pts)), std::move(index)});
    }
    return out;
}

IndexTuple dnc_triangle(const ConvexPolygon& polygon, const DncOptions& options) {
    if (polygon.size() < 3) throw Error(ErrorCode::TooFew, "need at least 3 vertices");
    std::vector<std::size_t> ids(polygon.size());
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    DncSolver solver(options);
    const Candidate best = solver.solve(polygon.vertices(), ids, 0);
    return IndexTuple{best.local[0], best.local[1], best.local[2]};
}

}  // namespace maxtri
