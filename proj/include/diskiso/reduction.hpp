#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "diskiso/geom.hpp"

namespace diskiso {

struct CoverageSplit {
    std::vector<std::size_t> covered;    // indices into the input points
    std::vector<std::size_t> uncovered;

    std::vector<Point> covered_points(std::span<const Point> points) const;
    std::vector<Point> uncovered_points(std::span<const Point> points) const;
};

/// Splits points into those strictly inside some disk and the rest. A point
/// on a circle throws DegenerateInput.
CoverageSplit split_covered(std::span<const Disk> disks, std::span<const Point> points,
                            const Tolerance& tol = {});

struct CoverResult {
    std::vector<int> ids;                     // sorted
    std::vector<int> picks;                   // in greedy order
    std::vector<std::size_t> uncovered_after;  // remaining points after each pick
};

/// Classical greedy set cover: take the disk covering the most uncovered
/// points, smallest id first on ties. Throws Uncoverable if some point lies in
/// no disk.
CoverResult greedy_cover(std::span<const Disk> disks, std::span<const Point> points,
                         const Tolerance& tol = {});

}  // namespace diskiso
