#pragma once
// Exhaustive ground truth. Kept free of any shortcut shared with the fast
// algorithms: it enumerates every index combination and compares shoelace sums.

#include <cstddef>

#include "maxtri/geometry.hpp"

namespace maxtri {

// Largest P-aligned k-gon, k in {3, 4}; the lexicographically first maximum
// wins ties. O(n^k).
IndexTuple brute_force_max_kgon(const ConvexPolygon& polygon, std::size_t k);

}  // namespace maxtri
