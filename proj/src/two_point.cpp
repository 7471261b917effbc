#include "diskiso/two_point.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>

#include "diskiso/error.hpp"

namespace diskiso {

namespace {

constexpr double kCoverSlack = 1e-9;
constexpr int kPipelineRetries = 4;

std::map<int, std::size_t> index_by_id(std::span<const Disk> disks) {
    std::map<int, std::size_t> out;
    for (std::size_t i = 0; i < disks.size(); ++i) out[disks[i].id] = i;
    return out;
}

/// s' (or t'): midpoint of the longest arc of `disk_id` on a cycle bounding `face`.
ChainAnchor face_anchor(const UnionBoundary& ub, const FaceSignature& face, int disk_id) {
    const Arc* best = nullptr;
    for (int c : ub.cycles_bounding(face)) {
        for (const Arc& arc : ub.cycles()[c].arcs) {
            if (arc.disk_id != disk_id) continue;
            if (!best || arc.sweep > best->sweep) best = &arc;
        }
    }
    if (!best) {
        throw Error(ErrorKind::PiConstructionFailed,
                    "disk " + std::to_string(disk_id) + " does not bound the terminal face");
    }
    return {best->disk_index, best->mid_angle()};
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

std::vector<Disk> jitter(std::span<const Disk> disks, double amplitude, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> offset(-amplitude, amplitude);
    std::vector<Disk> out(disks.begin(), disks.end());
    for (Disk& d : out) d.center = d.center + Point{offset(rng), offset(rng)};
    return out;
}

TwoPointResult solve_component(std::span<const Disk> comp, Point s, Point t,
                               const Tolerance& tol) {
    TwoPointResult r;
    const UnionBoundary ub(comp, tol);
    const AugmentedSTGraph aug = augmented_st_graph(ub, s, t);
    r.sigma = shortest_disk_sequence(aug);
    if (!sigma_path_valid(r.sigma, comp, tol)) {
        throw Error(ErrorKind::InternalError, "shortest disk sequence has a chord");
    }
    r.pi = choose_waypoints(r.sigma, ub, s, t);
    const CutArrangement arrangement(comp, r.pi.chain(), tol);
    r.pieces = piece_graph(cut_into_pieces(arrangement));
    for (int id : r.sigma.disk_ids) {
        if (r.pieces.pieces_of(id).size() != 2) {
            throw Error(ErrorKind::PiConstructionFailed,
                        "σ disk " + std::to_string(id) + " is not cut into exactly two pieces");
        }
    }
    r.cycle = best_piece_cycle(r.pieces, r.sigma);
    r.ids = r.cycle.disk_ids;
    return r;
}

}  // namespace

std::vector<int> PieceGraph::pieces_of(int disk_id) const {
    std::vector<int> out;
    for (const DiskPiece& p : pieces) {
        if (p.disk_id == disk_id) out.push_back(p.piece_id);
    }
    return out;
}

bool chain_meets_disk_connectedly(const Chain& chain, const Disk& disk, const Tolerance& tol) {
    std::vector<std::pair<double, double>> intervals;
    for (std::size_t k = 0; k < chain.segment_count(); ++k) {
        const Point a = chain.waypoints[k];
        const Point v = chain.waypoints[k + 1] - a;
        const Point w = a - disk.center;
        const double A = dot(v, v);
        const double B = 2 * dot(v, w);
        const double r = disk.radius + kCoverSlack;
        const double C = dot(w, w) - r * r;
        const double disc = B * B - 4 * A * C;
        if (disc < 0) continue;
        const double root = std::sqrt(disc);
        const double lo = std::max(0.0, (-B - root) / (2 * A));
        const double hi = std::min(1.0, (-B + root) / (2 * A));
        if (lo > hi) continue;
        intervals.emplace_back(static_cast<double>(k) + lo, static_cast<double>(k) + hi);
    }
    if (intervals.empty()) return true;
    std::sort(intervals.begin(), intervals.end());
    double reach = intervals.front().second;
    for (std::size_t i = 1; i < intervals.size(); ++i) {
        if (intervals[i].first > reach + tol.eps) return false;
        reach = std::max(reach, intervals[i].second);
    }
    return true;
}

PiPath choose_waypoints(const SigmaPath& sigma, const UnionBoundary& ub, Point s, Point t) {
    if (sigma.empty()) throw Error(ErrorKind::PiConstructionFailed, "empty disk sequence");
    const auto& disks = ub.disks();
    const auto index = index_by_id(disks);
    auto disk = [&](int id) -> const Disk& { return disks[index.at(id)]; };

    PiPath pi;
    pi.source_face = ub.signature(s);
    pi.target_face = ub.signature(t);
    pi.head = face_anchor(ub, pi.source_face, sigma.disk_ids.front());
    pi.tail = face_anchor(ub, pi.target_face, sigma.disk_ids.back());

    pi.waypoints.push_back(disks[pi.head.disk_index].at_angle(pi.head.angle));
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i) {
        const Disk& a = disk(sigma.disk_ids[i]);
        const Disk& b = disk(sigma.disk_ids[i + 1]);
        const auto pts = circle_circle_intersect(a, b, ub.tolerance());
        if (pts.size() == 2) {
            pi.waypoints.push_back(midpoint(pts[0], pts[1]));
        } else {
            pi.waypoints.push_back(a.radius < b.radius ? a.center : b.center);
        }
    }
    pi.waypoints.push_back(disks[pi.tail.disk_index].at_angle(pi.tail.angle));

    // Segment k must lie in σ_k; by convexity its endpoints suffice.
    for (std::size_t k = 0; k + 1 < pi.waypoints.size(); ++k) {
        const Disk& d = disk(sigma.disk_ids[k]);
        for (Point p : {pi.waypoints[k], pi.waypoints[k + 1]}) {
            if (distance(p, d.center) > d.radius + kCoverSlack) {
                throw Error(ErrorKind::PiConstructionFailed,
                            "chain leaves σ disk " + std::to_string(d.id));
            }
        }
    }
    const Chain chain = pi.chain();
    for (int id : sigma.disk_ids) {
        if (!chain_meets_disk_connectedly(chain, disk(id), ub.tolerance())) {
            throw Error(ErrorKind::PiConstructionFailed,
                        "chain meets σ disk " + std::to_string(id) + " more than once");
        }
    }
    return pi;
}

std::vector<DiskPiece> cut_into_pieces(const CutArrangement& arrangement) {
    const auto& faces = arrangement.faces();
    const auto& disks = arrangement.disks();
    std::vector<DiskPiece> pieces;
    for (std::size_t i = 0; i < disks.size(); ++i) {
        UnionFind uf(faces.size());
        for (const auto& adj : arrangement.adjacencies()) {
            if (adj.circle < 0 || adj.circle == static_cast<int>(i)) continue;
            if (faces[adj.a].inside[i] && faces[adj.b].inside[i]) uf.unite(adj.a, adj.b);
        }
        std::map<std::size_t, std::size_t> piece_of_root;
        std::vector<DiskPiece> mine;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (!faces[f].inside[i]) continue;
            auto [it, fresh] = piece_of_root.emplace(uf.find(f), mine.size());
            if (fresh) {
                DiskPiece piece;
                piece.disk_id = disks[i].id;
                piece.representative = faces[f].sample;
                mine.push_back(piece);
            }
            mine[it->second].faces.push_back(f);
        }
        for (DiskPiece& p : mine) {
            p.piece_id = static_cast<int>(pieces.size());
            pieces.push_back(std::move(p));
        }
    }
    return pieces;
}

std::vector<DiskPiece> cut_into_pieces(std::span<const Disk> disks, const PiPath& pi,
                                       const Tolerance& tol) {
    return cut_into_pieces(CutArrangement(disks, pi.chain(), tol));
}

PieceGraph piece_graph(std::vector<DiskPiece> pieces) {
    PieceGraph h;
    h.pieces = std::move(pieces);
    h.adjacency.assign(h.pieces.size(), {});
    std::map<std::size_t, std::vector<std::size_t>> pieces_on_face;
    for (const DiskPiece& p : h.pieces) {
        for (std::size_t f : p.faces) pieces_on_face[f].push_back(static_cast<std::size_t>(p.piece_id));
    }
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [face, ids] : pieces_on_face) {
        for (std::size_t a = 0; a < ids.size(); ++a) {
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                if (h.pieces[ids[a]].disk_id == h.pieces[ids[b]].disk_id) continue;
                edges.emplace(std::min(ids[a], ids[b]), std::max(ids[a], ids[b]));
            }
        }
    }
    for (auto [a, b] : edges) {
        h.adjacency[a].push_back(b);
        h.adjacency[b].push_back(a);
    }
    for (auto& adj : h.adjacency) std::sort(adj.begin(), adj.end());
    return h;
}

PieceCycle best_piece_cycle(const PieceGraph& h, const SigmaPath& sigma) {
    constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
    std::vector<int> candidates = sigma.disk_ids;
    std::sort(candidates.begin(), candidates.end());

    PieceCycle best;
    for (int d : candidates) {
        const auto ends = h.pieces_of(d);
        if (ends.size() != 2) {
            throw Error(ErrorKind::PiConstructionFailed,
                        "σ disk " + std::to_string(d) + " does not have two pieces");
        }
        const auto from = static_cast<std::size_t>(ends[0]);
        const auto to = static_cast<std::size_t>(ends[1]);
        std::vector<std::size_t> dist(h.pieces.size(), kUnreached);
        std::queue<std::size_t> q;
        dist[to] = 0;
        q.push(to);
        while (!q.empty()) {
            const std::size_t v = q.front();
            q.pop();
            for (std::size_t w : h.adjacency[v]) {
                if (dist[w] == kUnreached) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
        }
        if (dist[from] == kUnreached) continue;
        if (!best.pieces.empty() && dist[from] + 1 >= best.pieces.size()) continue;

        PieceCycle cycle;
        cycle.disk_id = d;
        std::size_t cur = from;
        cycle.pieces.push_back(cur);
        while (cur != to) {
            // adjacency is sorted, so the first qualifying neighbour is the smallest id
            for (std::size_t w : h.adjacency[cur]) {
                if (dist[w] + 1 == dist[cur]) {
                    cur = w;
                    break;
                }
            }
            cycle.pieces.push_back(cur);
        }
        std::set<int> owners;
        for (std::size_t p : cycle.pieces) owners.insert(h.pieces[p].disk_id);
        cycle.disk_ids.assign(owners.begin(), owners.end());
        best = std::move(cycle);
    }
    if (best.pieces.empty()) {
        throw Error(ErrorKind::NoPieceCycle, "no σ disk has its two pieces connected in H");
    }
    return best;
}

TwoPointResult separate_two_points(std::span<const Disk> disks, Point s, Point t,
                                   const Tolerance& tol) {
    const UnionBoundary whole(disks, tol);
    if (whole.covers(s) || whole.covers(t)) {
        throw Error(ErrorKind::InvalidInstance, "a disk contains one of the terminals");
    }
    if (!separates(whole, s, t)) {
        throw Error(ErrorKind::NotSeparated, "disk set does not separate s and t");
    }

    const auto index = index_by_id(disks);
    const auto components = connected_components(intersection_graph(disks, tol));

    std::optional<TwoPointResult> best;
    for (const auto& ids : components) {
        std::vector<Disk> comp;
        for (int id : ids) comp.push_back(disks[index.at(id)]);
        if (!separates(UnionBoundary(comp, tol), s, t)) continue;

        std::optional<TwoPointResult> result;
        for (int attempt = 0; !result; ++attempt) {
            try {
                const std::vector<Disk> input =
                    attempt == 0 ? comp
                                 : jitter(comp, tol.min_feature, static_cast<std::uint64_t>(attempt));
                result = solve_component(input, s, t, tol);
            } catch (const Error& e) {
                const bool numeric = e.kind() == ErrorKind::DegenerateInput ||
                                     e.kind() == ErrorKind::PiConstructionFailed ||
                                     e.kind() == ErrorKind::RayDegeneracy;
                if (!numeric || attempt >= kPipelineRetries) throw;
            }
        }
        result->component = ids;
        if (!best || result->ids.size() < best->ids.size()) best = std::move(result);
    }
    if (!best) {
        throw Error(ErrorKind::InternalError, "no single component separates s and t");
    }

    std::vector<Disk> chosen;
    for (int id : best->ids) chosen.push_back(disks[index.at(id)]);
    if (!separates(UnionBoundary(chosen, tol), s, t)) {
        throw Error(ErrorKind::InternalError, "two-point output does not separate s and t");
    }
    return std::move(*best);
}

}  // namespace diskiso
