#pragma once
// Seeded random convex polygons in convex position on the integer lattice.

#include <cstddef>
#include <cstdint>
#include <random>

#include "maxtri/geometry.hpp"

namespace maxtri {

// Attempts before random_convex_polygon gives up with ResourceExhausted.
inline constexpr std::size_t kGeneratorAttempts = 64;

std::uint64_t splitmix64(std::uint64_t x);

// Uniform integer in [0, range) by rejection; unlike the std distributions
// the result sequence is the same on every standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t range);

/// A strictly convex CCW polygon with exactly n vertices whose coordinates lie
/// in [0, coord_bound]. The same (n, coord_bound, seed) always gives the same
/// polygon.
///
/// Valtr's construction: two sorted coordinate samples are split into
/// monotone chains, the resulting x and y increments are randomly paired,
/// sorted by angle and chained. Extra vectors are drawn up front; zero
/// vectors are dropped, parallel ones fused, and random neighbours merged
/// until exactly n remain. Anything that still fails validation is redrawn;
/// each redraw after a shortfall samples more (at most 8n + 64 values), and
/// after kGeneratorAttempts draws the call fails with ResourceExhausted.
ConvexPolygon random_convex_polygon(std::size_t n, std::int64_t coord_bound, std::uint64_t seed);

}  // namespace maxtri
