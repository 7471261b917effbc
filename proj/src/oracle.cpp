#include "diskiso/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <exception>
#include <limits>
#include <numeric>
#include <set>

#include "diskiso/arrangement.hpp"
#include "diskiso/error.hpp"

namespace diskiso {

namespace {

constexpr std::size_t kBlockSize = 2048;

class SubsetChecker {
public:
    SubsetChecker(std::span<const Disk> disks, std::span<const Point> points, const Tolerance& tol)
        : disks_(disks.begin(), disks.end()), points_(points.begin(), points.end()), tol_(tol) {
        std::sort(disks_.begin(), disks_.end(),
                  [](const Disk& a, const Disk& b) { return a.id < b.id; });
        const std::size_t n = disks_.size();
        overlap_.assign(n * n, 0);
        covers_.assign(n, {});
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) overlap_[i * n + j] = disks_overlap(disks_[i], disks_[j], tol_);
            }
            for (std::size_t p = 0; p < points_.size(); ++p) {
                if (point_in_disk(points_[p], disks_[i], tol_) == Containment::Inside)
                    covers_[i].push_back(p);
            }
        }
    }

    const std::vector<Disk>& sorted_disks() const { return disks_; }

    /// `subset` holds positions into sorted_disks().
    bool separates(std::span<const std::size_t> subset) const {
        std::vector<char> covered(points_.size(), 0);
        for (std::size_t i : subset)
            for (std::size_t p : covers_[i]) covered[p] = 1;
        std::vector<Point> open;
        for (std::size_t p = 0; p < points_.size(); ++p) {
            if (!covered[p]) open.push_back(points_[p]);
        }
        if (open.size() <= 1) return true;
        if (is_forest(subset)) return false;

        std::vector<Disk> chosen;
        for (std::size_t i : subset) chosen.push_back(disks_[i]);
        const UnionBoundary ub(chosen, tol_);
        std::set<FaceSignature> seen;
        for (Point p : open) {
            if (!seen.insert(ub.signature(p)).second) return false;
        }
        return true;
    }

private:
    bool is_forest(std::span<const std::size_t> subset) const {
        const std::size_t n = disks_.size();
        std::vector<std::size_t> parent(subset.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t a = 0; a < subset.size(); ++a) {
            for (std::size_t b = a + 1; b < subset.size(); ++b) {
                if (!overlap_[subset[a] * n + subset[b]]) continue;
                const std::size_t ra = find(a), rb = find(b);
                if (ra == rb) return false;
                parent[ra] = rb;
            }
        }
        return true;
    }

    std::vector<Disk> disks_;
    std::vector<Point> points_;
    Tolerance tol_;
    std::vector<char> overlap_;
    std::vector<std::vector<std::size_t>> covers_;
};

bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
    const std::size_t k = combo.size();
    for (std::size_t i = k; i-- > 0;) {
        if (combo[i] < n - k + i) {
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Index of the first separating subset in the block, or block.size().
std::size_t first_hit(const SubsetChecker& checker,
                      const std::vector<std::vector<std::size_t>>& block, Execution execution) {
    if (execution == Execution::Serial) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (checker.separates(block[i])) return i;
        }
        return block.size();
    }
    std::vector<char> hit(block.size(), 0);
    std::vector<std::exception_ptr> errors(block.size());
    const long count = static_cast<long>(block.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < count; ++i) {
        try {
            hit[i] = checker.separates(block[i]);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        if (hit[i]) return i;
    }
    return block.size();
}

}  // namespace

bool subset_separates(std::span<const Disk> disks, std::span<const int> subset,
                      std::span<const Point> points, const Tolerance& tol) {
    const SubsetChecker checker(disks, points, tol);
    std::vector<std::size_t> positions;
    const auto& sorted = checker.sorted_disks();
    for (int id : subset) {
        auto it = std::find_if(sorted.begin(), sorted.end(), [&](const Disk& d) { return d.id == id; });
        if (it == sorted.end()) throw Error(ErrorKind::InvalidInstance, "unknown disk id " + std::to_string(id));
        positions.push_back(static_cast<std::size_t>(it - sorted.begin()));
    }
    return checker.separates(positions);
}

OracleResult exact_min_separator(std::span<const Disk> disks, std::span<const Point> points,
                                 const OracleOptions& options) {
    if (disks.size() > options.max_n) {
        throw Error(ErrorKind::TooLarge, std::to_string(disks.size()) + " disks exceed the limit of " +
                                             std::to_string(options.max_n));
    }
    const SubsetChecker checker(disks, points, options.tol);
    const auto& sorted = checker.sorted_disks();
    const std::size_t n = sorted.size();

    OracleResult result;
    std::size_t enumerated = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::size_t> combo(k);
        std::iota(combo.begin(), combo.end(), 0);
        bool more = true;
        while (more) {
            std::vector<std::vector<std::size_t>> block;
            while (more && block.size() < kBlockSize) {
                block.push_back(combo);
                more = k > 0 && next_combination(combo, n);
                if (k == 0) more = false;
            }
            const std::size_t hit = first_hit(checker, block, options.execution);
            const std::size_t used = std::min(hit + 1, block.size());
            for (std::size_t i = 0; i < used; ++i, ++enumerated) {
                if (options.sample_stride && enumerated % options.sample_stride == 0) {
                    std::vector<int> ids;
                    for (std::size_t pos : block[i]) ids.push_back(sorted[pos].id);
                    result.sampled_subsets.push_back(std::move(ids));
                }
            }
            result.subsets_checked += used;
            if (hit < block.size()) {
                for (std::size_t pos : block[hit]) result.ids.push_back(sorted[pos].id);
                return result;
            }
        }
    }
    throw Error(ErrorKind::InvalidInstance, "the full disk set does not separate the points");
}

OracleResult exact_min_two_point(std::span<const Disk> disks, Point s, Point t,
                                 const OracleOptions& options) {
    const Point pair[2] = {s, t};
    return exact_min_separator(disks, pair, options);
}

namespace {

enum : unsigned char { kUnknown = 0, kBlocked = 1, kFromP = 2, kFromQ = 3 };

struct Raster {
    double x0, y0, h;
    long width, height;
    bool conservative;
    std::span<const Disk> disks;
    std::vector<unsigned char> state;

    bool blocked(long ix, long iy) const {
        const Point c{x0 + (static_cast<double>(ix) + 0.5) * h, y0 + (static_cast<double>(iy) + 0.5) * h};
        const double half_diag = h * std::sqrt(0.5);
        for (const Disk& d : disks) {
            const double dist = distance(c, d.center);
            if (conservative ? dist <= d.radius + half_diag : dist + half_diag <= d.radius) return true;
        }
        return false;
    }

    long cell_of(Point p) const {
        const long ix = std::clamp(static_cast<long>(std::floor((p.x - x0) / h)), 0L, width - 1);
        const long iy = std::clamp(static_cast<long>(std::floor((p.y - y0) / h)), 0L, height - 1);
        return iy * width + ix;
    }

    /// Bidirectional breadth-first search; true when p's and q's cells are
    /// in different free components.
    bool disconnected(Point p, Point q) {
        const long cp = cell_of(p);
        const long cq = cell_of(q);
        if (cp == cq) return false;
        if (blocked(cp % width, cp / width) || blocked(cq % width, cq / width)) return true;
        std::deque<long> frontier[2];
        state[cp] = kFromP;
        state[cq] = kFromQ;
        frontier[0].push_back(cp);
        frontier[1].push_back(cq);
        const unsigned char mark[2] = {kFromP, kFromQ};
        for (int side = 0;; side ^= 1) {
            auto& queue = frontier[side];
            if (queue.empty()) return true;
            const long cell = queue.front();
            queue.pop_front();
            const long ix = cell % width;
            const long iy = cell / width;
            const long nbr[4][2] = {{ix + 1, iy}, {ix - 1, iy}, {ix, iy + 1}, {ix, iy - 1}};
            for (const auto& nb : nbr) {
                if (nb[0] < 0 || nb[1] < 0 || nb[0] >= width || nb[1] >= height) continue;
                const long next = nb[1] * width + nb[0];
                unsigned char& st = state[next];
                if (st == mark[side ^ 1]) return false;
                if (st == kBlocked || st == mark[side]) continue;
                if (st == kUnknown) {
                    if (blocked(nb[0], nb[1])) {
                        st = kBlocked;
                        continue;
                    }
                }
                st = mark[side];
                queue.push_back(next);
            }
        }
    }
};

}  // namespace

GridVerdict grid_flood_verdict(std::span<const Disk> disks, Point p, Point q,
                               const GridOptions& options) {
    double clearance = std::numeric_limits<double>::infinity();
    double max_r = 0.0;
    double xmin = std::min(p.x, q.x), xmax = std::max(p.x, q.x);
    double ymin = std::min(p.y, q.y), ymax = std::max(p.y, q.y);
    for (const Disk& d : disks) {
        for (Point x : {p, q}) {
            const double gap = distance(x, d.center) - d.radius;
            if (gap < 0) return GridVerdict{true, options.resolution, 0};
            clearance = std::min(clearance, gap);
        }
        max_r = std::max(max_r, d.radius);
        xmin = std::min(xmin, d.center.x - d.radius);
        xmax = std::max(xmax, d.center.x + d.radius);
        ymin = std::min(ymin, d.center.y - d.radius);
        ymax = std::max(ymax, d.center.y + d.radius);
    }
    if (disks.empty()) max_r = 1.0;
    const double pad = 2 * max_r;
    xmin -= pad;
    ymin -= pad;
    xmax += pad;
    ymax += pad;

    const double floor_h = options.resolution / std::ldexp(1.0, options.max_refinements);
    double h = std::min(options.resolution, clearance / 2);
    if (h < floor_h) {
        throw Error(ErrorKind::ResolutionExhausted, "points are too close to a circle for the grid");
    }
    for (int refinement = 0; refinement <= options.max_refinements && h >= floor_h; ++refinement) {
        const long width = static_cast<long>(std::ceil((xmax - xmin) / h));
        const long height = static_cast<long>(std::ceil((ymax - ymin) / h));
        if (static_cast<std::size_t>(width) * static_cast<std::size_t>(height) > options.max_cells) break;
        bool verdict[2];
        for (int mode = 0; mode < 2; ++mode) {
            Raster raster{xmin, ymin, h, width, height, mode == 0, disks, {}};
            raster.state.assign(static_cast<std::size_t>(width * height), kUnknown);
            verdict[mode] = raster.disconnected(p, q);
        }
        if (verdict[0] == verdict[1]) return GridVerdict{verdict[0], h, refinement};
        h /= 2;
    }
    throw Error(ErrorKind::ResolutionExhausted,
                "conservative and optimistic rasterizations still disagree");
}

}  // namespace diskiso
