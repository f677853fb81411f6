#pragma once
// Differential testing of the fast algorithms against the exhaustive oracle.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxtri/geometry.hpp"

namespace maxtri {

enum class Target { Ds, Quadratic, Dnc, DsQuad };

const char* to_string(Target t);
// Accepts the CLI spellings: ds, quadratic, dnc, ds-quad.
Target parse_target(const std::string& name);
std::size_t target_k(Target t);
// Targets that promise optimal output; a failure there is a bug.
bool is_corrected(Target t);

struct FuzzConfig {
    std::size_t trials = 1000;
    std::size_t n_min = 4;
    std::size_t n_max = 64;
    std::int64_t coord_bound = 1'000'000;
    std::uint64_t seed = 0;
    std::vector<Target> targets{Target::Quadratic, Target::Dnc};
    std::size_t k = 3;
    bool shrink = false;
    std::size_t threads = 1;
    // When non-empty, these polygons replace the generator, one trial each.
    std::vector<ConvexPolygon> corpus;
};

// Throws InvalidInput when the config breaks its invariants.
void check_config(const FuzzConfig& cfg);

struct FuzzFailure {
    std::size_t trial = 0;
    std::optional<std::uint64_t> seed;  // absent for corpus trials
    Target target = Target::Ds;
    ConvexPolygon polygon;
    IndexTuple target_tuple;
    DoubledArea target_area;
    IndexTuple oracle_tuple;
    DoubledArea oracle_area;
    DoubledArea deficit;
    std::optional<ConvexPolygon> shrunk;
};

struct TargetStats {
    Target target = Target::Ds;
    std::size_t runs = 0;
    std::size_t failures = 0;
    DoubledArea max_deficit;
};

struct FuzzReport {
    FuzzConfig config;
    std::size_t trials_run = 0;
    std::vector<FuzzFailure> failures;  // trial order, then target order
    std::vector<TargetStats> stats;     // config target order

    bool corrected_failures() const;
};

// Per-trial seed; trial i of a campaign is replayable from trial_seed alone.
std::uint64_t trial_seed(std::uint64_t campaign_seed, std::size_t trial);
ConvexPolygon trial_polygon(std::uint64_t trial_seed, std::size_t n_min, std::size_t n_max, std::int64_t coord_bound);

// Runs `target` on `polygon` the way the campaign does (walks start at vertex 0).
IndexTuple run_target(Target target, const ConvexPolygon& polygon);

// Deletes vertices one at a time while `target` still loses to the oracle.
ConvexPolygon shrink_failure(Target target, const ConvexPolygon& polygon);

FuzzReport differential_fuzz(const FuzzConfig& cfg);

}  // namespace maxtri
