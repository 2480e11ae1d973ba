#pragma once

#include <limits>
#include <memory>
#include <vector>

#include "tstar/dubins.hpp"
#include "tstar/grid.hpp"
#include "tstar/transition.hpp"

namespace tstar {

inline constexpr double kInfCost = std::numeric_limits<double>::infinity();

/// Single-speed Dubins geometry of all 512 transition shapes at one turning
/// radius: path length plus collision-test sample offsets relative to the
/// from-cell origin. Shapes are translation-invariant, so one table serves
/// every cell of a map.
class LatticeEdges {
  public:
    struct Edge {
        bool feasible = false;
        double length = 0.0;
        std::vector<Vec2> samples;
    };

    LatticeEdges(double rho, double cell_size, double ds);

    const Edge& edge(int triple_id) const { return edges_[triple_id]; }
    double rho() const { return rho_; }

    /// True iff every sample of the shape, translated to the given from-cell,
    /// lands in a free cell of the map.
    bool edge_clear(int triple_id, int from_cx, int from_cy, const GridMap& map) const;

  private:
    double rho_;
    double cell_size_;
    std::vector<Edge> edges_;
};

/// Minimum-length collision-free single-speed Dubins path over the
/// configuration lattice (Dijkstra). Returns the configuration sequence
/// from start to goal, or empty if unreachable.
std::vector<Configuration> dubins_grid_path(const GridMap& map, const Configuration& start,
                                            const Configuration& goal, const LatticeEdges& edges);

/// Length of the path produced by dubins_grid_path, kInfCost if unreachable.
double dubins_grid_distance(const GridMap& map, const Configuration& start,
                            const Configuration& goal, const LatticeEdges& edges);

/// Lattice distance to a fixed goal from every configuration (backward
/// Dijkstra over reversed edges). kInfCost where the goal is unreachable.
std::vector<double> dubins_distance_field(const GridMap& map, const Configuration& goal,
                                          const LatticeEdges& edges);

}  // namespace tstar
