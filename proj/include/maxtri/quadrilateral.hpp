#pragma once
// The original four-pointer quadrilateral walk, reproduced as printed,
// including its nested advance loops and pointer-collision guards.

#include <cstddef>

#include "maxtri/geometry.hpp"
#include "maxtri/triangle.hpp"

namespace maxtri {

struct QuadrilateralRun {
    IndexTuple quadrilateral;
    RunTrace trace;
};

// Counter-clockwise traversal from `root`. Not always optimal. Throws
// InvalidInput for n < 4.
QuadrilateralRun ds_quadrilateral(const ConvexPolygon& polygon, std::size_t root);

}  // namespace maxtri
