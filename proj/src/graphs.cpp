#include "diskiso/graphs.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>

#include "diskiso/error.hpp"

namespace diskiso {

std::size_t IntersectionGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& adj : adjacency) twice += adj.size();
    return twice / 2;
}

bool IntersectionGraph::has_edge(std::size_t a, std::size_t b) const {
    return std::binary_search(adjacency[a].begin(), adjacency[a].end(), b);
}

IntersectionGraph intersection_graph(std::span<const Disk> disks, const Tolerance& tol) {
    IntersectionGraph g;
    g.disks.assign(disks.begin(), disks.end());
    g.adjacency.resize(disks.size());
    for (std::size_t i = 0; i < disks.size(); ++i) {
        for (std::size_t j = i + 1; j < disks.size(); ++j) {
            if (disks_overlap(disks[i], disks[j], tol)) {
                g.adjacency[i].push_back(j);
                g.adjacency[j].push_back(i);
            }
        }
    }
    for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
    return g;
}

std::vector<std::vector<int>> connected_components(const IntersectionGraph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.size(), 0);
    for (std::size_t start = 0; start < g.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::queue<std::size_t> q;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            const std::size_t v = q.front();
            q.pop();
            comp.push_back(g.disks[v].id);
            for (std::size_t w : g.adjacency[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

bool is_forest(const IntersectionGraph& g) {
    return g.edge_count() + connected_components(g).size() == g.size();
}

AugmentedSTGraph augmented_st_graph(const UnionBoundary& ub, Point s, Point t) {
    if (!separates(ub, s, t)) {
        throw Error(ErrorKind::NotSeparated, "disk set does not separate s and t");
    }
    AugmentedSTGraph g;
    g.graph = intersection_graph(ub.disks(), ub.tolerance());
    g.s = s;
    g.t = t;
    std::map<int, std::size_t> index_of;
    for (std::size_t i = 0; i < g.graph.disks.size(); ++i) index_of[g.graph.disks[i].id] = i;
    for (int id : ub.face_boundary_disks(s)) g.source_neighbors.push_back(index_of.at(id));
    for (int id : ub.face_boundary_disks(t)) g.target_neighbors.push_back(index_of.at(id));
    return g;
}

AugmentedSTGraph augmented_st_graph(std::span<const Disk> disks, Point s, Point t,
                                    const Tolerance& tol) {
    return augmented_st_graph(UnionBoundary(disks, tol), s, t);
}

SigmaPath shortest_disk_sequence(const AugmentedSTGraph& g) {
    constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
    const auto& graph = g.graph;
    // dist[v]: disks on the cheapest path from v to t, v included.
    std::vector<std::size_t> dist(graph.size(), kUnreached);
    std::queue<std::size_t> q;
    for (std::size_t v : g.target_neighbors) {
        dist[v] = 1;
        q.push(v);
    }
    while (!q.empty()) {
        const std::size_t v = q.front();
        q.pop();
        for (std::size_t w : graph.adjacency[v]) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }

    auto pick_smallest = [&](const std::vector<std::size_t>& candidates, std::size_t want) {
        std::size_t best = kUnreached;
        for (std::size_t v : candidates) {
            if (dist[v] != want) continue;
            if (best == kUnreached || graph.disks[v].id < graph.disks[best].id) best = v;
        }
        return best;
    };

    std::size_t length = kUnreached;
    for (std::size_t v : g.source_neighbors) length = std::min(length, dist[v]);
    if (length == kUnreached) throw Error(ErrorKind::NoPath, "terminals are disconnected");

    SigmaPath sigma;
    std::size_t cur = pick_smallest(g.source_neighbors, length);
    while (true) {
        sigma.disk_ids.push_back(graph.disks[cur].id);
        if (dist[cur] == 1) break;
        cur = pick_smallest(graph.adjacency[cur], dist[cur] - 1);
    }
    return sigma;
}

bool sigma_path_valid(const SigmaPath& sigma, std::span<const Disk> disks, const Tolerance& tol) {
    std::map<int, const Disk*> by_id;
    for (const Disk& d : disks) by_id[d.id] = &d;
    const auto& ids = sigma.disk_ids;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            const bool overlap = disks_overlap(*by_id.at(ids[i]), *by_id.at(ids[j]), tol);
            if (j == i + 1 ? !overlap : overlap) return false;
        }
    }
    return true;
}

}  // namespace diskiso
