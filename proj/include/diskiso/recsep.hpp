#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "diskiso/execution.hpp"
#include "diskiso/geom.hpp"
#include "diskiso/reduction.hpp"

namespace diskiso {

/// One call of the recursion with at least two points.
struct TraceStep {
    std::size_t depth = 0;
    std::vector<std::size_t> group;  // point indices handled by this call
    std::size_t s = 0;               // the pair whose separator was kept
    std::size_t t = 0;
    std::vector<int> chosen;         // B, sorted
    std::vector<std::size_t> partition_sizes;
    std::vector<Point> pi;           // waypoints of the kept pair's cutting path
};

struct SeparatorResult {
    std::vector<int> ids;  // sorted union of all chosen sets
    std::vector<TraceStep> trace;
    std::size_t two_point_calls = 0;
};

struct RecSepOptions {
    Tolerance tol;
    Execution execution = Execution::Parallel;
};

/// Recursive greedy separator. Every pair in each group is separated with
/// the two-point algorithm, the smallest separator B is kept, the group is
/// split by the faces of B and each part is handled recursively.
///
/// Requires every point uncovered and every pair separated by `disks`
/// (InvalidInstance otherwise). The returned set is verified to separate all
/// pairs; a failure raises InternalError.
SeparatorResult rec_sep(std::span<const Disk> disks, std::span<const Point> points,
                        const RecSepOptions& options = {});

struct SolveResult {
    std::vector<int> ids;  // sorted
    CoverageSplit split;
    CoverResult cover;
    SeparatorResult separator;
};

/// Full solver: greedy cover for the covered points, rec_sep for the rest.
SolveResult separate_points(std::span<const Disk> disks, std::span<const Point> points,
                            const RecSepOptions& options = {});

/// True if every pair of points is separated by `disks` (covered points count
/// as separated from everything).
bool separates_all(std::span<const Disk> disks, std::span<const Point> points,
                   const Tolerance& tol = {});

}  // namespace diskiso
