#include <doctest.h>

#include <random>

#include "diskiso/error.hpp"
#include "diskiso/reduction.hpp"

using namespace diskiso;

namespace {

// Smallest cover by enumeration over subsets of disk positions.
std::size_t brute_force_cover(const std::vector<Disk>& disks, const std::vector<Point>& pts) {
    const std::size_t n = disks.size();
    std::size_t best = n + 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size >= best) continue;
        bool all = true;
        for (Point p : pts) {
            bool hit = false;
            for (std::size_t i = 0; i < n && !hit; ++i)
                hit = (mask >> i & 1u) && point_in_disk(p, disks[i]) == Containment::Inside;
            all = all && hit;
        }
        if (all) best = size;
    }
    return best;
}

double harmonic(std::size_t k) {
    double h = 0;
    for (std::size_t i = 1; i <= k; ++i) h += 1.0 / static_cast<double>(i);
    return h;
}

}  // namespace

TEST_CASE("split_covered examples") {
    const std::vector<Disk> disks{{0, {0, 0}, 1}, {1, {5, 0}, 1}};
    const std::vector<Point> pts{{0, 0}, {10, 10}, {5.2, 0.1}, {2.5, 0}, {-3, -3}};
    const auto split = split_covered(disks, pts);
    CHECK(split.covered == std::vector<std::size_t>{0, 2});
    CHECK(split.uncovered == std::vector<std::size_t>{1, 3, 4});
    CHECK(split.covered_points(pts).size() == 2);
    CHECK(split.uncovered_points(pts).size() == 3);

    try {
        split_covered(disks, std::vector<Point>{{1, 0}});
        FAIL("boundary point accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateInput);
    }
}

TEST_CASE("greedy_cover: trivial cases") {
    const std::vector<Disk> disks{{0, {0, 0}, 1}};
    CHECK(greedy_cover(disks, std::vector<Point>{}).ids.empty());
    CHECK(greedy_cover(disks, std::vector<Point>{{0.2, 0}}).ids == std::vector<int>{0});
    try {
        greedy_cover(disks, std::vector<Point>{{4, 4}});
        FAIL("expected Uncoverable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Uncoverable);
    }
}

TEST_CASE("greedy_cover: ties go to the smaller id") {
    // A={p1,p2}, B={p3}, C={p1,p3}.
    const std::vector<Disk> disks{{0, {0, 0}, 1}, {1, {3, 0}, 1}, {2, {1.5, 0}, 1}};
    const std::vector<Point> pts{{0.7, 0}, {-0.5, 0}, {2.2, 0}};
    const auto r = greedy_cover(disks, pts);
    CHECK(r.picks == std::vector<int>{0, 1});
    CHECK(r.ids == std::vector<int>{0, 1});
    CHECK(r.uncovered_after == std::vector<std::size_t>{1, 0});
    CHECK(brute_force_cover(disks, pts) == 2);
}

TEST_CASE("greedy_cover within the harmonic bound of the optimum") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> c(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + trial % 13;
        std::vector<Disk> disks;
        for (std::size_t i = 0; i < n; ++i) disks.push_back({static_cast<int>(i), {c(rng), c(rng)}, 1});
        std::vector<Point> pts;
        for (int tries = 0; tries < 200 && pts.size() < 8; ++tries) {
            const Point p{c(rng), c(rng)};
            bool inside = false, near = false;
            for (const Disk& d : disks) {
                const auto state = point_in_disk(p, d);
                inside = inside || state == Containment::Inside;
                near = near || state == Containment::Boundary;
            }
            if (inside && !near) pts.push_back(p);
        }
        const auto greedy = greedy_cover(disks, pts);
        const std::size_t opt = brute_force_cover(disks, pts);
        CHECK(greedy.ids.size() >= opt);
        CHECK(static_cast<double>(greedy.ids.size()) <= harmonic(pts.size()) * static_cast<double>(opt) + 1e-12);
        for (Point p : pts) {
            bool hit = false;
            for (int id : greedy.ids) hit = hit || point_in_disk(p, disks[id]) == Containment::Inside;
            CHECK(hit);
        }
    }
}
