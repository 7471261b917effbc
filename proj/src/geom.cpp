#include "diskiso/geom.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "diskiso/error.hpp"

namespace diskiso {

std::vector<Point> circle_circle_intersect(const Disk& d1, const Disk& d2, const Tolerance& tol) {
    if (d1.id == d2.id && d1 == d2) {
        throw Error(ErrorKind::DegenerateInput, "circle intersected with itself");
    }
    const Point delta = d2.center - d1.center;
    const double d = norm(delta);
    const double rsum = d1.radius + d2.radius;
    const double rdiff = std::abs(d1.radius - d2.radius);
    if (std::abs(d - rsum) <= tol.eps || std::abs(d - rdiff) <= tol.eps) {
        std::ostringstream msg;
        msg << "circles " << d1.id << " and " << d2.id << " are tangent or coincident";
        throw Error(ErrorKind::DegenerateInput, msg.str());
    }
    if (d > rsum || d < rdiff) return {};

    const double a = (d * d + d1.radius * d1.radius - d2.radius * d2.radius) / (2 * d);
    const double h = std::sqrt(std::max(0.0, d1.radius * d1.radius - a * a));
    const Point u = (1.0 / d) * delta;
    const Point base = d1.center + a * u;
    const Point left{-u.y, u.x};
    return {base + h * left, base - h * left};
}

Containment point_in_disk(Point p, const Disk& d, const Tolerance& tol) {
    const double gap = distance(p, d.center) - d.radius;
    if (std::abs(gap) <= tol.eps) return Containment::Boundary;
    return gap < 0 ? Containment::Inside : Containment::Outside;
}

bool disks_overlap(const Disk& d1, const Disk& d2, const Tolerance& tol) {
    return distance(d1.center, d2.center) < d1.radius + d2.radius - tol.eps;
}

bool disk_nested_in(const Disk& inner, const Disk& outer, const Tolerance& tol) {
    return distance(inner.center, outer.center) + inner.radius < outer.radius - tol.eps;
}

namespace {

struct Crossing {
    Point at;
    std::size_t i, j;
};

}  // namespace

GeneralPositionReport check_general_position(std::span<const Disk> disks,
                                             std::span<const Point> points,
                                             const Tolerance& tol, double margin) {
    if (margin <= 0) margin = tol.min_feature;
    GeneralPositionReport report;
    std::set<std::size_t> bad_disks, bad_points;
    auto fail = [&](std::string msg) { report.messages.push_back(std::move(msg)); };

    std::vector<Crossing> crossings;
    for (std::size_t i = 0; i < disks.size(); ++i) {
        for (std::size_t j = i + 1; j < disks.size(); ++j) {
            const Disk& a = disks[i];
            const Disk& b = disks[j];
            const double d = distance(a.center, b.center);
            const double rsum = a.radius + b.radius;
            const double rdiff = std::abs(a.radius - b.radius);
            if (std::abs(d - rsum) < margin || std::abs(d - rdiff) < margin) {
                bad_disks.insert(i);
                bad_disks.insert(j);
                std::ostringstream msg;
                msg << "disks " << a.id << " and " << b.id << " are within " << margin
                    << " of tangency";
                fail(msg.str());
                continue;
            }
            if (d < rsum && d > rdiff) {
                for (Point p : circle_circle_intersect(a, b, tol)) crossings.push_back({p, i, j});
            }
        }
    }

    for (std::size_t p = 0; p < points.size(); ++p) {
        for (std::size_t i = 0; i < disks.size(); ++i) {
            if (std::abs(distance(points[p], disks[i].center) - disks[i].radius) < margin) {
                bad_points.insert(p);
                bad_disks.insert(i);
                std::ostringstream msg;
                msg << "point " << p << " lies within " << margin << " of circle " << disks[i].id;
                fail(msg.str());
            }
        }
    }

    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& a, const Crossing& b) { return a.at.x < b.at.x; });
    for (std::size_t a = 0; a < crossings.size(); ++a) {
        for (std::size_t b = a + 1; b < crossings.size(); ++b) {
            if (crossings[b].at.x - crossings[a].at.x >= margin) break;
            if (distance(crossings[a].at, crossings[b].at) < margin) {
                for (std::size_t k : {crossings[a].i, crossings[a].j, crossings[b].i, crossings[b].j})
                    bad_disks.insert(k);
                fail("circle intersection points closer than the general-position margin");
            }
        }
    }

    report.disks.assign(bad_disks.begin(), bad_disks.end());
    report.points.assign(bad_points.begin(), bad_points.end());
    return report;
}

std::pair<std::vector<Disk>, std::vector<Point>> perturb_to_general_position(
    std::span<const Disk> disks, std::span<const Point> points, const Tolerance& tol,
    std::uint64_t seed) {
    constexpr int kMaxRounds = 64;

    std::vector<Disk> out_disks(disks.begin(), disks.end());
    std::vector<Point> out_points(points.begin(), points.end());
    std::vector<char> jitter_disk(disks.size(), 0), jitter_point(points.size(), 0);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> offset(-tol.min_feature, tol.min_feature);

    for (int round = 0; round <= kMaxRounds; ++round) {
        auto report = check_general_position(out_disks, out_points, tol);
        if (report.ok()) return {std::move(out_disks), std::move(out_points)};
        if (round == kMaxRounds) break;
        for (std::size_t i : report.disks) jitter_disk[i] = 1;
        for (std::size_t p : report.points) jitter_point[p] = 1;
        // Offsets are always drawn relative to the input so the total
        // displacement stays within min_feature per coordinate.
        for (std::size_t i = 0; i < disks.size(); ++i) {
            if (!jitter_disk[i]) continue;
            out_disks[i].center = disks[i].center + Point{offset(rng), offset(rng)};
        }
        for (std::size_t p = 0; p < points.size(); ++p) {
            if (!jitter_point[p]) continue;
            out_points[p] = points[p] + Point{offset(rng), offset(rng)};
        }
    }
    throw Error(ErrorKind::PerturbationFailed,
                "could not reach general position within " + std::to_string(kMaxRounds) +
                    " rounds");
}

}  // namespace diskiso
