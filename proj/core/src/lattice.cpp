#include "tstar/lattice.hpp"

#include <algorithm>
#include <queue>

namespace tstar {

LatticeEdges::LatticeEdges(double rho, double cell_size, double ds)
    : rho_(rho), cell_size_(cell_size), edges_(512) {
    for (int id = 0; id < 512; ++id) {
        const Transition t = transition_from_triple(id);
        const Pose q0{0.5 * cell_size, 0.5 * cell_size, heading_angle(t.from.h)};
        const Pose q1{(t.to.cx + 0.5) * cell_size, (t.to.cy + 0.5) * cell_size,
                      heading_angle(t.to.h)};
        Edge e;
        try {
            const DubinsPath p = dubins_shortest(q0, q1, rho);
            e.feasible = true;
            e.length = p.length();
            for (const Pose& s : sample_path(p, ds)) e.samples.push_back({s.x, s.y});
        } catch (const std::exception&) {
            e.feasible = false;
        }
        edges_[id] = std::move(e);
    }
}

bool LatticeEdges::edge_clear(int triple_id, int from_cx, int from_cy, const GridMap& map) const {
    const Edge& e = edges_[triple_id];
    if (!e.feasible) return false;
    const double ox = from_cx * cell_size_;
    const double oy = from_cy * cell_size_;
    for (const Vec2& s : e.samples) {
        if (!map.point_free(s.x + ox, s.y + oy)) return false;
    }
    return true;
}

namespace {

struct QueueItem {
    double dist;
    int node;
    bool operator>(const QueueItem& o) const {
        return dist > o.dist || (dist == o.dist && node > o.node);
    }
};

using MinQueue = std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<QueueItem>>;

}  // namespace

std::vector<Configuration> dubins_grid_path(const GridMap& map, const Configuration& start,
                                            const Configuration& goal, const LatticeEdges& edges) {
    if (!map.is_free(start.cx, start.cy) || !map.is_free(goal.cx, goal.cy)) return {};
    const int n = lattice_size(map);
    std::vector<double> dist(n, kInfCost);
    std::vector<int> parent(n, -1);
    const int start_idx = configuration_index(start, map);
    const int goal_idx = configuration_index(goal, map);
    dist[start_idx] = 0.0;
    MinQueue queue;
    queue.push({0.0, start_idx});
    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (d > dist[u]) continue;
        if (u == goal_idx) break;
        const int h0 = u % kNumHeadings;
        const int cell = u / kNumHeadings;
        const int cx = cell % map.width;
        const int cy = cell / map.width;
        for (int dir = 0; dir < 8; ++dir) {
            const int nx = cx + kNeighborOffsets[dir][0];
            const int ny = cy + kNeighborOffsets[dir][1];
            if (!map.is_free(nx, ny)) continue;
            for (int h1 = 0; h1 < kNumHeadings; ++h1) {
                const int triple = dir * 64 + h0 * 8 + h1;
                const auto& e = edges.edge(triple);
                if (!e.feasible) continue;
                const int v = (ny * map.width + nx) * kNumHeadings + h1;
                const double nd = d + e.length;
                if (nd >= dist[v]) continue;
                if (!edges.edge_clear(triple, cx, cy, map)) continue;
                dist[v] = nd;
                parent[v] = u;
                queue.push({nd, v});
            }
        }
    }
    if (dist[goal_idx] == kInfCost) return {};
    std::vector<Configuration> path;
    for (int v = goal_idx; v != -1; v = parent[v]) {
        const int h = v % kNumHeadings;
        const int cell = v / kNumHeadings;
        path.push_back({cell % map.width, cell / map.width, h});
    }
    std::reverse(path.begin(), path.end());
    return path;
}

double dubins_grid_distance(const GridMap& map, const Configuration& start,
                            const Configuration& goal, const LatticeEdges& edges) {
    // Path extraction is cheap next to the search itself; reuse it.
    const auto path = dubins_grid_path(map, start, goal, edges);
    if (path.empty()) return kInfCost;
    double total = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        const Transition t{path[i - 1], path[i]};
        total += edges.edge(transition_triple_id(t)).length;
    }
    return total;
}

std::vector<double> dubins_distance_field(const GridMap& map, const Configuration& goal,
                                          const LatticeEdges& edges) {
    const int n = lattice_size(map);
    std::vector<double> dist(n, kInfCost);
    if (!map.is_free(goal.cx, goal.cy)) return dist;
    const int goal_idx = configuration_index(goal, map);
    dist[goal_idx] = 0.0;
    MinQueue queue;
    queue.push({0.0, goal_idx});
    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (d > dist[u]) continue;
        const int h1 = u % kNumHeadings;
        const int cell = u / kNumHeadings;
        const int cx = cell % map.width;
        const int cy = cell / map.width;
        // Relax reversed edges: predecessors sit one step against each
        // neighbor direction and may carry any heading.
        for (int dir = 0; dir < 8; ++dir) {
            const int px = cx - kNeighborOffsets[dir][0];
            const int py = cy - kNeighborOffsets[dir][1];
            if (!map.is_free(px, py)) continue;
            for (int h0 = 0; h0 < kNumHeadings; ++h0) {
                const int triple = dir * 64 + h0 * 8 + h1;
                const auto& e = edges.edge(triple);
                if (!e.feasible) continue;
                const int v = (py * map.width + px) * kNumHeadings + h0;
                const double nd = d + e.length;
                if (nd >= dist[v]) continue;
                if (!edges.edge_clear(triple, px, py, map)) continue;
                dist[v] = nd;
                queue.push({nd, v});
            }
        }
    }
    return dist;
}

}  // namespace tstar
