#include "maxtri/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "maxtri/oracle.hpp"
#include "maxtri/quadrilateral.hpp"
#include "maxtri/random_polygon.hpp"
#include "maxtri/triangle.hpp"

namespace maxtri {

const char* to_string(Target t) {
    switch (t) {
        case Target::Ds: return "ds";
        case Target::Quadratic: return "quadratic";
        case Target::Dnc: return "dnc";
        case Target::DsQuad: return "ds-quad";
    }
    return "?";
}

Target parse_target(const std::string& name) {
    for (Target t : {Target::Ds, Target::Quadratic, Target::Dnc, Target::DsQuad}) {
        if (name == to_string(t)) return t;
    }
    throw Error(ErrorCode::InvalidInput, "unknown target '" + name + "'");
}

std::size_t target_k(Target t) { return t == Target::DsQuad ? 4 : 3; }

bool is_corrected(Target t) { return t == Target::Quadratic || t == Target::Dnc; }

bool FuzzReport::corrected_failures() const {
    return std::any_of(failures.begin(), failures.end(), [](const FuzzFailure& f) { return is_corrected(f.target); });
}

void check_config(const FuzzConfig& cfg) {
    if (cfg.k != 3 && cfg.k != 4) throw Error(ErrorCode::InvalidInput, "k must be 3 or 4");
    if (cfg.targets.empty()) throw Error(ErrorCode::InvalidInput, "no targets");
    for (Target t : cfg.targets) {
        if (target_k(t) != cfg.k) {
            throw Error(ErrorCode::InvalidInput, std::string("target ") + to_string(t) + " does not solve k = " + std::to_string(cfg.k));
        }
    }
    if (!cfg.corpus.empty()) {
        for (const ConvexPolygon& p : cfg.corpus) {
            if (p.size() < cfg.k) throw Error(ErrorCode::InvalidInput, "corpus polygon smaller than k");
        }
        return;
    }
    if (cfg.trials < 1) throw Error(ErrorCode::InvalidInput, "trials must be at least 1");
    if (cfg.n_min < cfg.k || cfg.n_min < 3) throw Error(ErrorCode::InvalidInput, "n_min must be at least k");
    if (cfg.n_max < cfg.n_min) throw Error(ErrorCode::InvalidInput, "n_max is below n_min");
    if (cfg.coord_bound < 1 || cfg.coord_bound > kCoordinateBound) {
        throw Error(ErrorCode::InvalidInput, "coordinate bound out of range");
    }
}

std::uint64_t trial_seed(std::uint64_t campaign_seed, std::size_t trial) {
    return splitmix64(campaign_seed ^ splitmix64(static_cast<std::uint64_t>(trial)));
}

ConvexPolygon trial_polygon(std::uint64_t seed, std::size_t n_min, std::size_t n_max, std::int64_t coord_bound) {
    const std::size_t n = n_min + splitmix64(seed) % (n_max - n_min + 1);
    return random_convex_polygon(n, coord_bound, seed);
}

IndexTuple run_target(Target target, const ConvexPolygon& polygon) {
    switch (target) {
        case Target::Ds: return ds_triangle(polygon, 0).triangle;
        case Target::Quadratic: return quadratic_triangle(polygon);
        case Target::Dnc: return dnc_triangle(polygon);
        case Target::DsQuad: return ds_quadrilateral(polygon, 0).quadrilateral;
    }
    throw Error(ErrorCode::InvalidInput, "unknown target");
}

namespace {

bool loses(Target target, const ConvexPolygon& polygon) {
    const std::size_t k = target_k(target);
    if (polygon.size() < k) return false;
    return doubled_area(polygon, run_target(target, polygon)) < doubled_area(polygon, brute_force_max_kgon(polygon, k));
}

struct TrialResult {
    std::vector<FuzzFailure> failures;
    std::exception_ptr error;
};

TrialResult run_trial(const FuzzConfig& cfg, std::size_t trial) {
    TrialResult out;
    try {
        std::optional<std::uint64_t> seed;
        ConvexPolygon polygon = cfg.corpus.empty()
                                    ? trial_polygon(*(seed = trial_seed(cfg.seed, trial)), cfg.n_min, cfg.n_max, cfg.coord_bound)
                                    : cfg.corpus[trial];
        const IndexTuple best = brute_force_max_kgon(polygon, cfg.k);
        const DoubledArea best_area = doubled_area(polygon, best);
        for (Target t : cfg.targets) {
            const IndexTuple got = run_target(t, polygon);
            const DoubledArea area = doubled_area(polygon, got);
            if (area >= best_area) continue;
            FuzzFailure f{trial, seed, t, polygon, got, area, best, best_area, best_area - area, std::nullopt};
            if (cfg.shrink) f.shrunk = shrink_failure(t, polygon);
            out.failures.push_back(std::move(f));
        }
    } catch (...) {
        out.error = std::current_exception();
    }
    return out;
}

}  // namespace

ConvexPolygon shrink_failure(Target target, const ConvexPolygon& polygon) {
    std::vector<Point> pts(polygon.vertices().begin(), polygon.vertices().end());
    bool progress = true;
    while (progress && pts.size() > target_k(target)) {
        progress = false;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            std::vector<Point> trial = pts;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
            const ConvexPolygon candidate = validate_convex_polygon(trial, Orientation::CCW);
            if (loses(target, candidate)) {
                pts = std::move(trial);
                progress = true;
                break;
            }
        }
    }
    return validate_convex_polygon(pts, Orientation::CCW);
}

FuzzReport differential_fuzz(const FuzzConfig& cfg) {
    check_config(cfg);
    const std::size_t trials = cfg.corpus.empty() ? cfg.trials : cfg.corpus.size();
    std::vector<TrialResult> results(trials);

    const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.threads, trials));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < trials; i = next++) results[i] = run_trial(cfg, i);
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    FuzzReport report;
    report.config = cfg;
    report.trials_run = trials;
    for (Target t : cfg.targets) report.stats.push_back({t, trials, 0, DoubledArea{0}});
    for (TrialResult& r : results) {
        if (r.error) std::rethrow_exception(r.error);
        for (FuzzFailure& f : r.failures) {
            for (TargetStats& s : report.stats) {
                if (s.target != f.target) continue;
                ++s.failures;
                s.max_deficit = std::max(s.max_deficit, f.deficit);
            }
            report.failures.push_back(std::move(f));
        }
    }
    return report;
}

}  // namespace maxtri
