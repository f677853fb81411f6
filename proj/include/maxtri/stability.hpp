#pragma once
// Interleaving and stability predicates for P-aligned triangles and k-gons.
//
// Stability is tested with "never strictly larger": a replacement of equal
// area does not break stability.

#include <cstddef>
#include <vector>

#include "maxtri/geometry.hpp"

namespace maxtri {

struct StableTriangleSet {
    std::size_t root = 0;
    std::vector<IndexTuple> triangles;
};

// Closed-interval interleaving; coinciding vertices count. Tuples must have
// equal size.
bool interleaves(const IndexTuple& a, const IndexTuple& b, const ConvexPolygon& polygon);

// Replacing either non-root vertex of `t` by any other vertex never yields a
// strictly larger triangle.
bool is_2_stable(const ConvexPolygon& polygon, const IndexTuple& t, std::size_t root);

bool is_3_stable(const ConvexPolygon& polygon, const IndexTuple& t);

// Single-vertex replacement by any vertex outside `q` (the result taken in
// cyclic order) never strictly increases the doubled area.
bool is_k_stable(const ConvexPolygon& polygon, const IndexTuple& q);

/// All 2-stable triangles rooted at `root`, in sweep order (middle vertex
/// ascending, then far vertex ascending, offsets counted from the root).
///
/// One linear pass: the far pointer never resets while the middle pointer
/// advances. Two precomputed tables give, for every candidate edge through
/// the root, the farthest vertex on the opposite side, so each candidate is
/// checked in O(1).
StableTriangleSet enumerate_2_stable_rooted(const ConvexPolygon& polygon, std::size_t root);

// Largest triangle containing `root`; O(n). Ties keep the first triangle in
// sweep order.
IndexTuple largest_rooted_triangle(const ConvexPolygon& polygon, std::size_t root);

// Every 3-stable triangle, collected from the per-root 2-stable sets. Sorted.
std::vector<IndexTuple> enumerate_3_stable(const ConvexPolygon& polygon);

}  // namespace maxtri
