#include "diskiso/cut_arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "diskiso/arrangement.hpp"
#include "diskiso/error.hpp"

namespace diskiso {

namespace {

[[noreturn]] void degenerate(const std::string& what) {
    throw Error(ErrorKind::DegenerateInput, what);
}

// Minimum angular gap between distinct half-edges leaving one vertex.
constexpr double kDirectionGap = 1e-12;
// Chain endpoints pinned to a circle may sit this far off it numerically.
constexpr double kAnchorSlack = 1e-7;

double point_segment_distance(Point p, Point a, Point b) {
    const Point v = b - a;
    const double len2 = dot(v, v);
    double t = len2 > 0 ? dot(p - a, v) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, a + t * v);
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

struct Box {
    double xmin = std::numeric_limits<double>::infinity();
    double ymin = std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();
    void add(Point p, double pad = 0.0) {
        xmin = std::min(xmin, p.x - pad);
        ymin = std::min(ymin, p.y - pad);
        xmax = std::max(xmax, p.x + pad);
        ymax = std::max(ymax, p.y + pad);
    }
    bool contains(Point p) const { return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax; }
};

}  // namespace

CutArrangement::CutArrangement(std::span<const Disk> disks, const Chain& chain,
                               const Tolerance& tol)
    : disks_(disks.begin(), disks.end()), tol_(tol) {
    build_vertices(chain);
    build_edges(chain);
    link_vertices();
    trace_cycles();
    assign_faces();
    label_faces();
}

void CutArrangement::build_vertices(const Chain& chain) {
    const std::size_t n = disks_.size();
    const std::size_t m = chain.segment_count();
    on_circle_.assign(n, {});
    on_segment_.assign(m, {});

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (Point p : circle_circle_intersect(disks_[i], disks_[j], tol_)) {
                const int v = static_cast<int>(vertices_.size());
                vertices_.push_back(p);
                on_circle_[i].emplace_back(normalize_angle(disks_[i].angle_of(p)), v);
                on_circle_[j].emplace_back(normalize_angle(disks_[j].angle_of(p)), v);
            }
        }
    }
    const std::size_t circle_vertex_count = vertices_.size();

    const auto& wp = chain.waypoints;
    const int first_waypoint = static_cast<int>(vertices_.size());
    auto anchor_of = [&](std::size_t w) -> const std::optional<ChainAnchor>& {
        static const std::optional<ChainAnchor> none;
        if (w == 0) return chain.head;
        if (w + 1 == wp.size()) return chain.tail;
        return none;
    };
    for (std::size_t w = 0; w < wp.size(); ++w) {
        vertices_.push_back(wp[w]);
        const auto& anchor = anchor_of(w);
        if (anchor) {
            on_circle_[anchor->disk_index].emplace_back(normalize_angle(anchor->angle),
                                                        first_waypoint + static_cast<int>(w));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (anchor && anchor->disk_index == i) continue;
            if (std::abs(distance(wp[w], disks_[i].center) - disks_[i].radius) <= tol_.eps)
                degenerate("chain waypoint lies on circle " + std::to_string(disks_[i].id));
        }
    }
    for (std::size_t k = 0; k < m; ++k) {
        on_segment_[k].emplace_back(0.0, first_waypoint + static_cast<int>(k));
        on_segment_[k].emplace_back(1.0, first_waypoint + static_cast<int>(k + 1));
    }

    // Circle-segment crossings.
    for (std::size_t k = 0; k < m; ++k) {
        const Point a = wp[k];
        const Point b = wp[k + 1];
        const Point v = b - a;
        const double len = norm(v);
        if (len <= tol_.eps) degenerate("zero-length chain segment");
        const auto& anchor_a = anchor_of(k);
        const auto& anchor_b = anchor_of(k + 1);
        for (std::size_t i = 0; i < n; ++i) {
            const Disk& d = disks_[i];
            const Point w = a - d.center;
            const double line_dist = std::abs(cross(v, d.center - a)) / len;
            const double foot = -dot(w, v) / (len * len);
            if (std::abs(line_dist - d.radius) <= tol_.eps && foot > -tol_.eps && foot < 1 + tol_.eps)
                degenerate("chain segment tangent to circle " + std::to_string(d.id));
            const double A = dot(v, v);
            const double B = 2 * dot(v, w);
            const double C = dot(w, w) - d.radius * d.radius;
            const double disc = B * B - 4 * A * C;
            if (disc <= 0) continue;
            const double root = std::sqrt(disc);
            for (double t : {(-B - root) / (2 * A), (-B + root) / (2 * A)}) {
                if (anchor_a && anchor_a->disk_index == i && std::abs(t) * len < kAnchorSlack) continue;
                if (anchor_b && anchor_b->disk_index == i && std::abs(1 - t) * len < kAnchorSlack)
                    continue;
                if (t <= 0 || t >= 1) continue;
                const Point p = a + t * v;
                const int vid = static_cast<int>(vertices_.size());
                vertices_.push_back(p);
                on_circle_[i].emplace_back(normalize_angle(d.angle_of(p)), vid);
                on_segment_[k].emplace_back(t, vid);
            }
        }
    }

    // Chain self-crossings and fold-backs.
    for (std::size_t k = 0; k < m; ++k) {
        const Point a = wp[k];
        const Point r = wp[k + 1] - a;
        if (k + 1 < m) {
            const Point s = wp[k + 2] - wp[k + 1];
            if (std::abs(cross(r, s)) <= tol_.eps * norm(r) * norm(s) && dot(r, s) < 0)
                degenerate("chain folds back on itself");
        }
        for (std::size_t l = k + 2; l < m; ++l) {
            const Point c = wp[l];
            const Point s = wp[l + 1] - c;
            for (Point e : {wp[l], wp[l + 1]}) {
                if (point_segment_distance(e, wp[k], wp[k + 1]) <= tol_.eps)
                    degenerate("chain waypoint lies on another chain segment");
            }
            for (Point e : {wp[k], wp[k + 1]}) {
                if (point_segment_distance(e, wp[l], wp[l + 1]) <= tol_.eps)
                    degenerate("chain waypoint lies on another chain segment");
            }
            const double denom = cross(r, s);
            if (std::abs(denom) <= 1e-15 * norm(r) * norm(s)) continue;
            const double t = cross(c - a, s) / denom;
            const double u = cross(c - a, r) / denom;
            if (t <= 0 || t >= 1 || u <= 0 || u >= 1) continue;
            const int vid = static_cast<int>(vertices_.size());
            vertices_.push_back(a + t * r);
            on_segment_[k].emplace_back(t, vid);
            on_segment_[l].emplace_back(u, vid);
        }
    }

    // Distinct vertices must be resolvable from one another.
    std::vector<int> order(vertices_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return vertices_[a].x < vertices_[b].x; });
    for (std::size_t a = 0; a < order.size(); ++a) {
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            const Point pa = vertices_[order[a]];
            const Point pb = vertices_[order[b]];
            if (pb.x - pa.x > tol_.eps) break;
            if (distance(pa, pb) <= tol_.eps) {
                const bool both_circle = static_cast<std::size_t>(order[a]) < circle_vertex_count &&
                                         static_cast<std::size_t>(order[b]) < circle_vertex_count;
                degenerate(both_circle ? "coincident circle intersection points"
                                       : "chain passes through an arrangement vertex");
            }
        }
    }
}

void CutArrangement::build_edges(const Chain& chain) {
    auto add_edge = [&](HalfEdge fwd, HalfEdge back) {
        const int f = static_cast<int>(half_edges_.size());
        fwd.twin = f + 1;
        back.twin = f;
        half_edges_.push_back(fwd);
        half_edges_.push_back(back);
    };

    for (std::size_t i = 0; i < disks_.size(); ++i) {
        const Disk& d = disks_[i];
        auto& ev = on_circle_[i];
        if (ev.empty()) {
            const int vid = static_cast<int>(vertices_.size());
            vertices_.push_back(d.at_angle(0.0));
            ev.emplace_back(0.0, vid);
        }
        std::sort(ev.begin(), ev.end());
        for (std::size_t k = 0; k < ev.size(); ++k) {
            const auto [a0, va] = ev[k];
            const auto [a1, vb] = ev[(k + 1) % ev.size()];
            const double sweep = ev.size() == 1 ? kTwoPi : ccw_sweep(a0, a1);
            if (sweep <= kDirectionGap) degenerate("coincident vertices on a circle");
            HalfEdge ccw;
            ccw.origin = va;
            ccw.dest = vb;
            ccw.circle = static_cast<int>(i);
            ccw.start_angle = a0;
            ccw.sweep = sweep;
            ccw.from = vertices_[va];
            ccw.to = vertices_[vb];
            ccw.direction = normalize_angle(a0 + kTwoPi / 4);
            HalfEdge cw = ccw;
            cw.origin = vb;
            cw.dest = va;
            cw.start_angle = a1;
            cw.sweep = -sweep;
            cw.from = vertices_[vb];
            cw.to = vertices_[va];
            cw.direction = normalize_angle(a1 - kTwoPi / 4);
            add_edge(ccw, cw);
        }
    }

    for (std::size_t k = 0; k < on_segment_.size(); ++k) {
        auto& ev = on_segment_[k];
        std::sort(ev.begin(), ev.end());
        const Point dir = chain.waypoints[k + 1] - chain.waypoints[k];
        for (std::size_t e = 0; e + 1 < ev.size(); ++e) {
            const int va = ev[e].second;
            const int vb = ev[e + 1].second;
            if (ev[e + 1].first - ev[e].first <= 0) degenerate("coincident vertices on a segment");
            HalfEdge fwd;
            fwd.origin = va;
            fwd.dest = vb;
            fwd.segment = static_cast<int>(k);
            fwd.from = vertices_[va];
            fwd.to = vertices_[vb];
            fwd.direction = normalize_angle(std::atan2(dir.y, dir.x));
            HalfEdge back = fwd;
            back.origin = vb;
            back.dest = va;
            back.from = vertices_[vb];
            back.to = vertices_[va];
            back.direction = normalize_angle(std::atan2(-dir.y, -dir.x));
            add_edge(fwd, back);
        }
    }
}

void CutArrangement::link_vertices() {
    outgoing_.assign(vertices_.size(), {});
    for (std::size_t h = 0; h < half_edges_.size(); ++h)
        outgoing_[half_edges_[h].origin].push_back(static_cast<int>(h));

    std::vector<std::size_t> position(half_edges_.size());
    for (auto& out : outgoing_) {
        std::sort(out.begin(), out.end(), [&](int a, int b) {
            return half_edges_[a].direction < half_edges_[b].direction;
        });
        for (std::size_t k = 0; k < out.size(); ++k) {
            position[out[k]] = k;
            if (out.size() > 1) {
                const double gap = ccw_sweep(half_edges_[out[k]].direction,
                                             half_edges_[out[(k + 1) % out.size()]].direction);
                if (gap <= kDirectionGap || kTwoPi - gap <= kDirectionGap)
                    degenerate("curves meet tangentially at a vertex");
            }
        }
    }
    for (auto& h : half_edges_) {
        const auto& out = outgoing_[h.dest];
        const std::size_t k = position[h.twin];
        h.next = out[(k + out.size() - 1) % out.size()];
    }
}

void CutArrangement::trace_cycles() {
    for (std::size_t h0 = 0; h0 < half_edges_.size(); ++h0) {
        if (half_edges_[h0].cycle >= 0) continue;
        const int id = static_cast<int>(cycles_.size());
        std::vector<int> cycle;
        const Point origin = half_edges_[h0].from;
        double area = 0.0;
        int h = static_cast<int>(h0);
        do {
            if (half_edges_[h].cycle >= 0) degenerate("inconsistent half-edge linkage");
            half_edges_[h].cycle = id;
            cycle.push_back(h);
            const HalfEdge& e = half_edges_[h];
            if (e.circle >= 0) {
                const Disk& d = disks_[e.circle];
                const Point c = d.center - origin;
                const double a0 = e.start_angle;
                const double a1 = e.start_angle + e.sweep;
                area += 0.5 * (d.radius * c.x * (std::sin(a1) - std::sin(a0)) -
                               d.radius * c.y * (std::cos(a1) - std::cos(a0)) +
                               d.radius * d.radius * e.sweep);
            } else {
                area += 0.5 * cross(e.from - origin, e.to - origin);
            }
            h = e.next;
        } while (h != static_cast<int>(h0));
        cycles_.push_back(std::move(cycle));
        cycle_area_.push_back(area);
    }
}

bool CutArrangement::ray_hits_cycle_odd(Point p, Point u, int cycle, bool& degenerate_ray) const {
    int crossings = 0;
    for (int h : cycles_[cycle]) {
        const HalfEdge& e = half_edges_[h];
        if (e.circle >= 0) {
            const Disk& d = disks_[e.circle];
            for (double lambda : detail::ray_circle_hits(p, u, d, tol_, degenerate_ray)) {
                const Point hit = p + lambda * u;
                if (std::abs(e.sweep) >= kTwoPi) {
                    ++crossings;
                    continue;
                }
                if (distance(hit, e.from) <= tol_.eps || distance(hit, e.to) <= tol_.eps) {
                    degenerate_ray = true;
                    return false;
                }
                const double lo = e.sweep > 0 ? e.start_angle : normalize_angle(e.start_angle + e.sweep);
                if (ccw_sweep(lo, normalize_angle(d.angle_of(hit))) < std::abs(e.sweep)) ++crossings;
            }
        } else {
            const Point s = e.to - e.from;
            const double denom = cross(u, s);
            if (std::abs(denom) <= 1e-15 * norm(s)) {
                if (std::abs(cross(e.from - p, u)) <= tol_.eps) degenerate_ray = true;
                continue;
            }
            const double lambda = cross(e.from - p, s) / denom;
            const double mu = cross(e.from - p, u) / denom;
            if (lambda <= 0) continue;
            const Point hit = p + lambda * u;
            if (distance(hit, e.from) <= tol_.eps || distance(hit, e.to) <= tol_.eps) {
                degenerate_ray = true;
                return false;
            }
            if (mu > 0 && mu < 1) ++crossings;
        }
        if (degenerate_ray) return false;
    }
    return crossings % 2 == 1;
}

void CutArrangement::assign_faces() {
    UnionFind uf(vertices_.size());
    for (const auto& h : half_edges_) uf.unite(h.origin, h.dest);

    const std::size_t nc = cycles_.size();
    std::vector<std::size_t> component(nc);
    std::vector<int> outer_of(vertices_.size(), -1);
    for (std::size_t c = 0; c < nc; ++c) {
        component[c] = uf.find(half_edges_[cycles_[c].front()].origin);
        int& outer = outer_of[component[c]];
        if (outer < 0 || cycle_area_[c] < cycle_area_[outer]) outer = static_cast<int>(c);
    }

    faces_.clear();
    faces_.push_back(Face{true, {}, {}, {}});
    face_of_cycle_.assign(nc, 0);
    std::vector<Box> boxes(nc);
    for (std::size_t c = 0; c < nc; ++c) {
        if (outer_of[component[c]] == static_cast<int>(c)) continue;
        face_of_cycle_[c] = faces_.size();
        faces_.push_back(Face{false, {static_cast<int>(c)}, {}, {}});
        for (int h : cycles_[c]) {
            const HalfEdge& e = half_edges_[h];
            if (e.circle >= 0) {
                boxes[c].add(disks_[e.circle].center, disks_[e.circle].radius);
            } else {
                boxes[c].add(e.from);
                boxes[c].add(e.to);
            }
        }
    }

    for (std::size_t c = 0; c < nc; ++c) {
        if (outer_of[component[c]] != static_cast<int>(c)) continue;
        const Point probe = half_edges_[cycles_[c].front()].from;
        std::vector<int> candidates;
        for (std::size_t b = 0; b < nc; ++b) {
            if (component[b] == component[c] || outer_of[component[b]] == static_cast<int>(b))
                continue;
            if (boxes[b].contains(probe)) candidates.push_back(static_cast<int>(b));
        }
        int container = -1;
        bool located = false;
        for (int attempt = 0; attempt < detail::kRayRetries && !located; ++attempt) {
            const Point u = detail::ray_direction(attempt);
            bool degenerate_ray = false;
            container = -1;
            for (int b : candidates) {
                const bool inside = ray_hits_cycle_odd(probe, u, b, degenerate_ray);
                if (degenerate_ray) break;
                if (inside && (container < 0 || cycle_area_[b] < cycle_area_[container]))
                    container = b;
            }
            located = !degenerate_ray;
        }
        if (!located) throw Error(ErrorKind::RayDegeneracy, "could not locate arrangement hole");
        face_of_cycle_[c] = container < 0 ? 0 : face_of_cycle_[container];
        faces_[face_of_cycle_[c]].cycles.push_back(static_cast<int>(c));
    }
}

void CutArrangement::label_faces() {
    const std::size_t n = disks_.size();
    for (auto& face : faces_) {
        face.inside.assign(n, 0);
        if (face.unbounded) continue;
        int best = -1;
        double best_len = -1.0;
        for (int h : cycles_[face.cycles.front()]) {
            const HalfEdge& e = half_edges_[h];
            const double len = e.circle >= 0 ? disks_[e.circle].radius * std::abs(e.sweep)
                                             : distance(e.from, e.to);
            if (len > best_len) {
                best_len = len;
                best = h;
            }
        }
        const HalfEdge& e = half_edges_[best];
        Point mid, left;
        if (e.circle >= 0) {
            const Disk& d = disks_[e.circle];
            const double a = e.start_angle + e.sweep / 2;
            mid = d.at_angle(a);
            const Point radial{std::cos(a), std::sin(a)};
            left = e.sweep > 0 ? -1.0 * radial : radial;
        } else {
            mid = midpoint(e.from, e.to);
            const Point dir = (1.0 / best_len) * (e.to - e.from);
            left = {-dir.y, dir.x};
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (e.circle == static_cast<int>(i)) {
                face.inside[i] = e.sweep > 0;
            } else {
                face.inside[i] = distance(mid, disks_[i].center) < disks_[i].radius;
            }
        }
        face.sample = mid + std::min(1e-3, 0.05 * best_len) * left;
    }

    for (std::size_t h = 0; h < half_edges_.size(); ++h) {
        const HalfEdge& e = half_edges_[h];
        if (e.twin < static_cast<int>(h)) continue;
        const std::size_t fa = face_of_half_edge(static_cast<int>(h));
        const std::size_t fb = face_of_half_edge(e.twin);
        if (fa == fb) continue;
        adjacencies_.push_back({fa, fb, e.circle});
    }
}

}  // namespace diskiso
