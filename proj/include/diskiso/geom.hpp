#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace diskiso {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Point&, const Point&) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::sqrt(a.x * a.x + a.y * a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point midpoint(Point a, Point b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

struct Disk {
    int id = 0;
    Point center;
    double radius = 1.0;

    Point at_angle(double theta) const {
        return {center.x + radius * std::cos(theta), center.y + radius * std::sin(theta)};
    }
    double angle_of(Point p) const { return std::atan2(p.y - center.y, p.x - center.x); }

    friend bool operator==(const Disk&, const Disk&) = default;
};

/// Two-tier numeric policy: predicates resolve with `eps`, while inputs are
/// kept at least `min_feature` away from every degeneracy.
struct Tolerance {
    double eps = 1e-9;
    double min_feature = 1e-6;

    bool valid() const { return eps > 0 && eps < min_feature; }
    friend bool operator==(const Tolerance&, const Tolerance&) = default;
};

enum class Containment { Inside, Outside, Boundary };

constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Normalizes an angle into [0, 2π).
inline double normalize_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
    if (a >= kTwoPi) a -= kTwoPi;
    return a;
}

/// Counterclockwise sweep from `from` to `to`, in [0, 2π).
inline double ccw_sweep(double from, double to) { return normalize_angle(to - from); }

/// Intersection points of the two boundary circles. Empty when the circles
/// are disjoint or nested; throws DegenerateInput on tangency (external or
/// internal) within eps and on coincident circles. When two points are
/// returned, the first lies to the left of the directed center line d1 -> d2.
std::vector<Point> circle_circle_intersect(const Disk& d1, const Disk& d2,
                                           const Tolerance& tol = {});

Containment point_in_disk(Point p, const Disk& d, const Tolerance& tol = {});

/// Edge predicate of the intersection graph; tangent disks do not overlap.
bool disks_overlap(const Disk& d1, const Disk& d2, const Tolerance& tol = {});

/// True if `inner` lies strictly inside `outer` (circles do not meet).
bool disk_nested_in(const Disk& inner, const Disk& outer, const Tolerance& tol = {});

struct GeneralPositionReport {
    std::vector<std::size_t> disks;   // indices of disks involved in a violation
    std::vector<std::size_t> points;  // indices of points involved in a violation
    std::vector<std::string> messages;

    bool ok() const { return messages.empty(); }
};

/// Checks every general-position margin at `margin` (defaults to
/// tol.min_feature): tangent or coincident circles, points near circles,
/// and circle-circle intersection points closer than the margin to each
/// other (which covers three circles through a common point).
GeneralPositionReport check_general_position(std::span<const Disk> disks,
                                             std::span<const Point> points,
                                             const Tolerance& tol = {}, double margin = 0.0);

/// Jitters the elements involved in violations by at most tol.min_feature
/// per coordinate until check_general_position passes. Inputs that already
/// pass are returned unchanged. Deterministic for a given seed.
std::pair<std::vector<Disk>, std::vector<Point>> perturb_to_general_position(
    std::span<const Disk> disks, std::span<const Point> points, const Tolerance& tol = {},
    std::uint64_t seed = 0);

}  // namespace diskiso
