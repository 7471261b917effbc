#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "diskiso/execution.hpp"
#include "diskiso/geom.hpp"

namespace diskiso {

struct OracleOptions {
    std::size_t max_n = 20;
    Tolerance tol;
    Execution execution = Execution::Parallel;
    /// When non-zero, every `sample_stride`-th enumerated subset is recorded
    /// in OracleResult::sampled_subsets (for verifier cross-checks).
    std::size_t sample_stride = 0;
};

struct OracleResult {
    std::vector<int> ids;  // sorted; a minimum-cardinality separator
    std::size_t subsets_checked = 0;
    std::vector<std::vector<int>> sampled_subsets;
};

/// Exact minimum separator by enumeration: subsets in increasing size,
/// lexicographic by disk id within a size; the first separating subset is
/// returned. Throws TooLarge above max_n and InvalidInstance if even the
/// full set fails.
OracleResult exact_min_separator(std::span<const Disk> disks, std::span<const Point> points,
                                 const OracleOptions& options = {});

OracleResult exact_min_two_point(std::span<const Disk> disks, Point s, Point t,
                                 const OracleOptions& options = {});

/// Whether `subset` (a list of disk ids) separates every pair of points.
/// Forest-shaped intersection graphs are decided without building the union.
bool subset_separates(std::span<const Disk> disks, std::span<const int> subset,
                      std::span<const Point> points, const Tolerance& tol = {});

struct GridOptions {
    double resolution = 0.02;
    int max_refinements = 4;
    std::size_t max_cells = std::size_t{1} << 26;
};

struct GridVerdict {
    bool separated = false;
    double resolution = 0.0;  // cell size at which the two rasterizations agreed
    int refinements = 0;
};

/// Independent separation check on a raster. A conservative grid (a cell is
/// blocked if it may touch a disk) and an optimistic grid (blocked only if it
/// lies inside one disk) are flood-filled from p; the answer is accepted when
/// both agree, otherwise the cell size is halved. Throws ResolutionExhausted.
GridVerdict grid_flood_verdict(std::span<const Disk> disks, Point p, Point q,
                               const GridOptions& options = {});

inline bool grid_flood_separates(std::span<const Disk> disks, Point p, Point q,
                                 double resolution = 0.02) {
    GridOptions options;
    options.resolution = resolution;
    return grid_flood_verdict(disks, p, q, options).separated;
}

}  // namespace diskiso
