#include "diskiso/reduction.hpp"

#include <algorithm>

#include "diskiso/error.hpp"

namespace diskiso {

std::vector<Point> CoverageSplit::covered_points(std::span<const Point> points) const {
    std::vector<Point> out;
    for (std::size_t i : covered) out.push_back(points[i]);
    return out;
}

std::vector<Point> CoverageSplit::uncovered_points(std::span<const Point> points) const {
    std::vector<Point> out;
    for (std::size_t i : uncovered) out.push_back(points[i]);
    return out;
}

CoverageSplit split_covered(std::span<const Disk> disks, std::span<const Point> points,
                            const Tolerance& tol) {
    CoverageSplit split;
    for (std::size_t p = 0; p < points.size(); ++p) {
        bool inside = false;
        for (const Disk& d : disks) {
            const Containment c = point_in_disk(points[p], d, tol);
            if (c == Containment::Boundary) {
                throw Error(ErrorKind::DegenerateInput,
                            "point " + std::to_string(p) + " lies on circle " + std::to_string(d.id));
            }
            inside = inside || c == Containment::Inside;
        }
        (inside ? split.covered : split.uncovered).push_back(p);
    }
    return split;
}

CoverResult greedy_cover(std::span<const Disk> disks, std::span<const Point> points,
                         const Tolerance& tol) {
    std::vector<std::size_t> order(disks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return disks[a].id < disks[b].id; });

    std::vector<std::vector<std::size_t>> contains(disks.size());
    std::vector<char> coverable(points.size(), 0);
    for (std::size_t i = 0; i < disks.size(); ++i) {
        for (std::size_t p = 0; p < points.size(); ++p) {
            if (point_in_disk(points[p], disks[i], tol) == Containment::Inside) {
                contains[i].push_back(p);
                coverable[p] = 1;
            }
        }
    }
    for (std::size_t p = 0; p < points.size(); ++p) {
        if (!coverable[p]) throw Error(ErrorKind::Uncoverable, "point " + std::to_string(p) + " lies in no disk");
    }

    CoverResult result;
    std::vector<char> done(points.size(), 0);
    std::size_t remaining = points.size();
    while (remaining > 0) {
        std::size_t best = order.front();
        std::size_t best_gain = 0;
        for (std::size_t i : order) {
            std::size_t gain = 0;
            for (std::size_t p : contains[i]) gain += done[p] ? 0 : 1;
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        for (std::size_t p : contains[best]) {
            if (!done[p]) {
                done[p] = 1;
                --remaining;
            }
        }
        result.picks.push_back(disks[best].id);
        result.uncovered_after.push_back(remaining);
    }
    result.ids = result.picks;
    std::sort(result.ids.begin(), result.ids.end());
    return result;
}

}  // namespace diskiso
