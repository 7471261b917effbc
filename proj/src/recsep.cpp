#include "diskiso/recsep.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <optional>
#include <set>

#include "diskiso/arrangement.hpp"
#include "diskiso/error.hpp"
#include "diskiso/two_point.hpp"

namespace diskiso {

namespace {

struct PairOutcome {
    std::vector<int> ids;
    std::vector<Point> pi;
};

class RecursiveSeparator {
public:
    RecursiveSeparator(std::span<const Disk> disks, std::span<const Point> points,
                       const RecSepOptions& options)
        : disks_(disks), points_(points), options_(options) {
        for (std::size_t i = 0; i < disks.size(); ++i) index_[disks[i].id] = i;
    }

    void run(const std::vector<std::size_t>& group, std::size_t depth) {
        if (group.size() <= 1) return;

        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < group.size(); ++a)
            for (std::size_t b = a + 1; b < group.size(); ++b) pairs.emplace_back(group[a], group[b]);

        const auto outcomes = solve_pairs(pairs);
        result_.two_point_calls += pairs.size();

        // Pairs are in lexicographic order, so a strict comparison keeps the first minimum.
        std::size_t best = 0;
        for (std::size_t i = 1; i < outcomes.size(); ++i) {
            if (outcomes[i].ids.size() < outcomes[best].ids.size()) best = i;
        }

        std::vector<Disk> chosen;
        for (int id : outcomes[best].ids) chosen.push_back(disks_[index_.at(id)]);
        std::vector<Point> group_points;
        for (std::size_t p : group) group_points.push_back(points_[p]);
        const auto parts = partition_by_face(chosen, group_points, options_.tol);
        if (parts.size() < 2) {
            throw Error(ErrorKind::InternalError, "chosen separator leaves the group in one face");
        }

        TraceStep step;
        step.depth = depth;
        step.group = group;
        step.s = pairs[best].first;
        step.t = pairs[best].second;
        step.chosen = outcomes[best].ids;
        step.pi = outcomes[best].pi;
        for (const auto& part : parts) step.partition_sizes.push_back(part.size());
        result_.trace.push_back(std::move(step));
        chosen_.insert(outcomes[best].ids.begin(), outcomes[best].ids.end());

        for (const auto& part : parts) {
            std::vector<std::size_t> sub;
            for (std::size_t local : part) sub.push_back(group[local]);
            run(sub, depth + 1);
        }
    }

    SeparatorResult finish() {
        result_.ids.assign(chosen_.begin(), chosen_.end());
        return std::move(result_);
    }

private:
    std::vector<PairOutcome> solve_pairs(
        const std::vector<std::pair<std::size_t, std::size_t>>& pairs) const {
        std::vector<PairOutcome> outcomes(pairs.size());
        std::vector<std::exception_ptr> errors(pairs.size());
        const long count = static_cast<long>(pairs.size());
        const bool parallel = options_.execution == Execution::Parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (long i = 0; i < count; ++i) {
            try {
                auto r = separate_two_points(disks_, points_[pairs[i].first],
                                             points_[pairs[i].second], options_.tol);
                outcomes[i] = PairOutcome{std::move(r.ids), std::move(r.pi.waypoints)};
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
        return outcomes;
    }

    std::span<const Disk> disks_;
    std::span<const Point> points_;
    const RecSepOptions& options_;
    std::map<int, std::size_t> index_;
    std::set<int> chosen_;
    SeparatorResult result_;
};

}  // namespace

bool separates_all(std::span<const Disk> disks, std::span<const Point> points,
                   const Tolerance& tol) {
    const UnionBoundary ub(disks, tol);
    std::set<FaceSignature> seen;
    for (Point p : points) {
        FaceSignature sig = ub.signature(p);
        if (sig.covered) continue;
        if (!seen.insert(std::move(sig)).second) return false;
    }
    return true;
}

SeparatorResult rec_sep(std::span<const Disk> disks, std::span<const Point> points,
                        const RecSepOptions& options) {
    const UnionBoundary ub(disks, options.tol);
    for (std::size_t p = 0; p < points.size(); ++p) {
        if (ub.covers(points[p])) {
            throw Error(ErrorKind::InvalidInstance, "point " + std::to_string(p) + " is covered");
        }
    }
    if (!separates_all(disks, points, options.tol)) {
        throw Error(ErrorKind::InvalidInstance, "disk set does not separate the points");
    }

    RecursiveSeparator solver(disks, points, options);
    std::vector<std::size_t> all(points.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    solver.run(all, 0);
    SeparatorResult result = solver.finish();

    std::vector<Disk> chosen;
    for (const Disk& d : disks) {
        if (std::binary_search(result.ids.begin(), result.ids.end(), d.id)) chosen.push_back(d);
    }
    if (!separates_all(chosen, points, options.tol)) {
        throw Error(ErrorKind::InternalError, "recursive separator output fails verification");
    }
    return result;
}

SolveResult separate_points(std::span<const Disk> disks, std::span<const Point> points,
                            const RecSepOptions& options) {
    if (!separates_all(disks, points, options.tol)) {
        throw Error(ErrorKind::InvalidInstance, "disk set does not separate the points");
    }
    SolveResult out;
    out.split = split_covered(disks, points, options.tol);
    out.cover = greedy_cover(disks, out.split.covered_points(points), options.tol);
    out.separator = rec_sep(disks, out.split.uncovered_points(points), options);

    // Report trace indices against the caller's point list.
    for (TraceStep& step : out.separator.trace) {
        for (std::size_t& p : step.group) p = out.split.uncovered[p];
        step.s = out.split.uncovered[step.s];
        step.t = out.split.uncovered[step.t];
    }

    std::set<int> ids(out.cover.ids.begin(), out.cover.ids.end());
    ids.insert(out.separator.ids.begin(), out.separator.ids.end());
    out.ids.assign(ids.begin(), ids.end());

    std::vector<Disk> chosen;
    for (const Disk& d : disks) {
        if (ids.count(d.id)) chosen.push_back(d);
    }
    if (!separates_all(chosen, points, options.tol)) {
        throw Error(ErrorKind::InternalError, "solver output fails verification");
    }
    return out;
}

}  // namespace diskiso
