#include "diskiso/arrangement.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "diskiso/error.hpp"

namespace diskiso {

namespace detail {

RayHits ray_circle_hits(Point p, Point u, const Disk& d, const Tolerance& tol, bool& degenerate) {
    RayHits hits;
    const Point w = p - d.center;
    const double b = dot(u, w);
    const double line_dist = std::abs(cross(u, w));
    if (std::abs(line_dist - d.radius) <= tol.eps) {
        degenerate = true;
        return hits;
    }
    if (line_dist > d.radius) return hits;
    const double c = dot(w, w) - d.radius * d.radius;
    const double root = std::sqrt(std::max(0.0, b * b - c));
    for (double lambda : {-b - root, -b + root}) {
        if (lambda > 0) hits.lambda[hits.count++] = lambda;
    }
    return hits;
}

Point ray_direction(int attempt) {
    static const auto table = [] {
        std::array<Point, kRayRetries> dirs{};
        for (int i = 0; i < kRayRetries; ++i) {
            std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(i));
            std::uniform_real_distribution<double> angle(0.0, kTwoPi);
            const double a = angle(rng);
            dirs[i] = {std::cos(a), std::sin(a)};
        }
        return dirs;
    }();
    return table.at(static_cast<std::size_t>(attempt));
}

}  // namespace detail

namespace {

struct CircleEvent {
    double angle;
    int vertex;
    Point at;
};

double arc_signed_area(const Disk& d, double start, double sweep) {
    const double end = start + sweep;
    return 0.5 * (d.radius * d.center.x * (std::sin(end) - std::sin(start)) -
                  d.radius * d.center.y * (std::cos(end) - std::cos(start)) +
                  d.radius * d.radius * sweep);
}

bool strictly_inside_any(Point p, std::span<const Disk> disks, std::size_t skip) {
    for (std::size_t j = 0; j < disks.size(); ++j) {
        if (j == skip) continue;
        if (distance(p, disks[j].center) < disks[j].radius) return true;
    }
    return false;
}

}  // namespace

UnionBoundary::UnionBoundary(std::span<const Disk> disks, const Tolerance& tol)
    : disks_(disks.begin(), disks.end()), tol_(tol) {
    const std::size_t n = disks_.size();
    std::vector<std::vector<CircleEvent>> events(n);
    int next_vertex = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            auto pts = circle_circle_intersect(disks_[i], disks_[j], tol_);
            for (Point p : pts) {
                const int v = next_vertex++;
                events[i].push_back({normalize_angle(disks_[i].angle_of(p)), v, p});
                events[j].push_back({normalize_angle(disks_[j].angle_of(p)), v, p});
            }
        }
    }

    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < n; ++i) {
        const Disk& d = disks_[i];
        auto& ev = events[i];
        if (ev.empty()) {
            if (strictly_inside_any(d.at_angle(0.0), disks_, i)) continue;
            Arc arc;
            arc.disk_id = d.id;
            arc.disk_index = i;
            arc.start_angle = 0.0;
            arc.sweep = kTwoPi;
            arc.start = arc.end = d.at_angle(0.0);
            arc.full_circle = true;
            arcs.push_back(arc);
            continue;
        }
        std::sort(ev.begin(), ev.end(),
                  [](const CircleEvent& a, const CircleEvent& b) { return a.angle < b.angle; });
        for (std::size_t k = 0; k < ev.size(); ++k) {
            const CircleEvent& a = ev[k];
            const CircleEvent& b = ev[(k + 1) % ev.size()];
            double sweep = ccw_sweep(a.angle, b.angle);
            if (sweep <= tol_.eps) {
                throw Error(ErrorKind::DegenerateInput,
                            "coincident intersection points on circle " + std::to_string(d.id));
            }
            const double mid = normalize_angle(a.angle + sweep / 2);
            if (strictly_inside_any(d.at_angle(mid), disks_, i)) continue;
            Arc arc;
            arc.disk_id = d.id;
            arc.disk_index = i;
            arc.start_angle = a.angle;
            arc.sweep = sweep;
            arc.start = a.at;
            arc.end = b.at;
            arc.start_vertex = a.vertex;
            arc.end_vertex = b.vertex;
            arcs.push_back(arc);
        }
    }

    std::map<int, std::size_t> starting_at;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        if (arcs[a].full_circle) continue;
        if (!starting_at.emplace(arcs[a].start_vertex, a).second) {
            throw Error(ErrorKind::DegenerateInput, "union boundary vertex starts two arcs");
        }
    }

    std::vector<char> used(arcs.size(), 0);
    for (std::size_t a0 = 0; a0 < arcs.size(); ++a0) {
        if (used[a0]) continue;
        BoundaryCycle cycle;
        cycle.cycle_id = static_cast<int>(cycles_.size());
        std::size_t a = a0;
        while (true) {
            used[a] = 1;
            cycle.arcs.push_back(arcs[a]);
            cycle.signed_area +=
                arc_signed_area(disks_[arcs[a].disk_index], arcs[a].start_angle, arcs[a].sweep);
            if (arcs[a].full_circle) break;
            auto it = starting_at.find(arcs[a].end_vertex);
            if (it == starting_at.end()) {
                throw Error(ErrorKind::DegenerateInput, "union boundary does not close");
            }
            a = it->second;
            if (a == a0) break;
            if (used[a]) throw Error(ErrorKind::DegenerateInput, "union boundary cycles overlap");
        }
        cycles_.push_back(std::move(cycle));
    }

    for (const BoundaryCycle& cycle : cycles_) {
        const Arc* longest = &cycle.arcs.front();
        for (const Arc& arc : cycle.arcs) {
            if (arc.sweep > longest->sweep) longest = &arc;
        }
        const Disk& owner = disks_[longest->disk_index];
        const double mid = longest->mid_angle();
        const Point m = owner.at_angle(mid);
        double margin = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == longest->disk_index) continue;
            margin = std::min(margin, distance(m, disks_[j].center) - disks_[j].radius);
        }
        const double step = std::min(tol_.min_feature, margin / 2);
        if (step <= 2 * tol_.eps) {
            throw Error(ErrorKind::DegenerateInput, "no room for a face probe off cycle " +
                                                        std::to_string(cycle.cycle_id));
        }
        const Point probe = owner.at_angle(mid) + step * Point{std::cos(mid), std::sin(mid)};
        cycle_probes_.push_back(probe);
    }
    for (Point probe : cycle_probes_) cycle_faces_.push_back(signature(probe));
}

std::size_t UnionBoundary::arc_count() const {
    std::size_t total = 0;
    for (const auto& c : cycles_) total += c.arcs.size();
    return total;
}

bool UnionBoundary::covers(Point p) const {
    bool boundary = false;
    for (const Disk& d : disks_) {
        switch (point_in_disk(p, d, tol_)) {
        case Containment::Inside: return true;
        case Containment::Boundary: boundary = true; break;
        case Containment::Outside: break;
        }
    }
    if (boundary) {
        std::ostringstream msg;
        msg << "point (" << p.x << ", " << p.y << ") lies on a circle";
        throw Error(ErrorKind::DegenerateInput, msg.str());
    }
    return false;
}

FaceSignature UnionBoundary::signature(Point p) const {
    if (covers(p)) return FaceSignature{true, {}};

    // Hits and their angles are computed once per disk on first use, then
    // shared by the disk's arcs.
    struct DiskHits {
        int attempt = -1;
        detail::RayHits hits;
        double angle[2];
        Point at[2];
    };
    std::vector<DiskHits> per_disk(disks_.size());
    for (int attempt = 0; attempt < detail::kRayRetries; ++attempt) {
        const Point u = detail::ray_direction(attempt);
        bool degenerate = false;
        auto hits_of = [&](std::size_t i) -> const DiskHits& {
            DiskHits& dh = per_disk[i];
            if (dh.attempt != attempt) {
                dh.attempt = attempt;
                dh.hits = detail::ray_circle_hits(p, u, disks_[i], tol_, degenerate);
                for (int h = 0; h < dh.hits.count; ++h) {
                    dh.at[h] = p + dh.hits.lambda[h] * u;
                    dh.angle[h] = normalize_angle(disks_[i].angle_of(dh.at[h]));
                }
            }
            return dh;
        };

        FaceSignature sig;
        for (const BoundaryCycle& cycle : cycles_) {
            int crossings = 0;
            for (const Arc& arc : cycle.arcs) {
                const DiskHits& dh = hits_of(arc.disk_index);
                if (degenerate) break;
                for (int h = 0; h < dh.hits.count; ++h) {
                    if (arc.full_circle) {
                        ++crossings;
                        continue;
                    }
                    if (distance(dh.at[h], arc.start) <= tol_.eps ||
                        distance(dh.at[h], arc.end) <= tol_.eps) {
                        degenerate = true;
                        break;
                    }
                    if (ccw_sweep(arc.start_angle, dh.angle[h]) < arc.sweep) ++crossings;
                }
                if (degenerate) break;
            }
            if (degenerate) break;
            if (crossings % 2 == 1) sig.enclosing_cycles.push_back(cycle.cycle_id);
        }
        if (!degenerate) return sig;
    }
    throw Error(ErrorKind::RayDegeneracy, "ray casting retries exhausted");
}

std::vector<int> UnionBoundary::cycles_bounding(const FaceSignature& face) const {
    std::vector<int> out;
    for (const BoundaryCycle& cycle : cycles_) {
        if (cycle_faces_[cycle.cycle_id] == face) out.push_back(cycle.cycle_id);
    }
    return out;
}

std::vector<int> UnionBoundary::face_boundary_disks(Point p) const {
    const FaceSignature sig = signature(p);
    if (sig.covered) throw Error(ErrorKind::InvalidInstance, "face query on a covered point");
    std::set<int> ids;
    for (int c : cycles_bounding(sig)) {
        for (const Arc& arc : cycles_[c].arcs) ids.insert(arc.disk_id);
    }
    return {ids.begin(), ids.end()};
}

std::size_t UnionBoundary::complement_face_count() const {
    std::set<FaceSignature> faces{FaceSignature{}};
    faces.insert(cycle_faces_.begin(), cycle_faces_.end());
    return faces.size();
}

bool separates(const UnionBoundary& ub, Point p, Point q) {
    const FaceSignature sp = ub.signature(p);
    const FaceSignature sq = ub.signature(q);
    if (sp.covered || sq.covered) return true;
    return sp != sq;
}

bool separates(std::span<const Disk> disks, Point p, Point q, const Tolerance& tol) {
    return separates(UnionBoundary(disks, tol), p, q);
}

std::vector<std::vector<std::size_t>> partition_by_face(const UnionBoundary& ub,
                                                        std::span<const Point> points) {
    std::vector<std::vector<std::size_t>> groups;
    std::map<FaceSignature, std::size_t> group_of;
    for (std::size_t i = 0; i < points.size(); ++i) {
        FaceSignature sig = ub.signature(points[i]);
        if (sig.covered) {
            throw Error(ErrorKind::InvalidInstance,
                        "point " + std::to_string(i) + " is covered; faces are undefined");
        }
        auto [it, fresh] = group_of.emplace(std::move(sig), groups.size());
        if (fresh) groups.emplace_back();
        groups[it->second].push_back(i);
    }
    return groups;
}

std::vector<std::vector<std::size_t>> partition_by_face(std::span<const Disk> disks,
                                                        std::span<const Point> points,
                                                        const Tolerance& tol) {
    return partition_by_face(UnionBoundary(disks, tol), points);
}

std::vector<int> face_boundary_disks(std::span<const Disk> disks, Point p, const Tolerance& tol) {
    return UnionBoundary(disks, tol).face_boundary_disks(p);
}

std::size_t complement_face_count(std::span<const Disk> disks, const Tolerance& tol) {
    return UnionBoundary(disks, tol).complement_face_count();
}

}  // namespace diskiso
