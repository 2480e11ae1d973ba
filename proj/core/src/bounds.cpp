#include "tstar/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tstar {

namespace {

bool is_lattice_pose(const Pose& p, const GridMap& map, Configuration& out) {
    const double fx = p.x / map.cell_size - 0.5;
    const double fy = p.y / map.cell_size - 0.5;
    const int cx = static_cast<int>(std::lround(fx));
    const int cy = static_cast<int>(std::lround(fy));
    if (std::fabs(fx - cx) > 1e-9 || std::fabs(fy - cy) > 1e-9) return false;
    if (!map.in_bounds(cx, cy)) return false;
    const double fh = p.theta / (kPi / 4.0);
    int h = static_cast<int>(std::lround(fh)) % 8;
    if (h < 0) h += 8;
    if (std::fabs(angle_diff(p.theta, heading_angle(h))) > 1e-9) return false;
    out = {cx, cy, h};
    return true;
}

double obstacle_aware_bound(const Pose& s1, const Pose& s2, const VehicleParams& vehicle,
                            const GridMap* map) {
    if (map) {
        Configuration c1, c2;
        if (is_lattice_pose(s1, *map, c1) && is_lattice_pose(s2, *map, c2)) {
            const LatticeEdges edges(vehicle.rho_min(), map->cell_size, map->cell_size / 10.0);
            const double d = dubins_grid_distance(*map, c1, c2, edges);
            if (d != kInfCost) return d / vehicle.v_max;
            return kInfCost;
        }
    }
    return dubins_length(s1, s2, vehicle.rho_min()) / vehicle.v_max;
}

}  // namespace

const char* bound_kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::EuclideanOverVmax: return "euclid";
        case BoundKind::DubinsMinOverVmax: return "dubins";
        case BoundKind::DubinsMinObstacleAware: return "dubins-obstacle";
        case BoundKind::WindLB1: return "wind-lb1";
        case BoundKind::WindLB2: return "wind-lb2";
    }
    return "?";
}

double ground_speed(const Vec2& d, const WindVector& wind, double v_max) {
    if (wind.is_zero()) return v_max;
    const double wmag = wind.magnitude();
    if (wmag >= v_max) throw std::invalid_argument("ground_speed: need |w| < v_max");
    const double along = d.x * wind.wx + d.y * wind.wy;
    return along + std::sqrt(along * along + v_max * v_max - wmag * wmag);
}

double rho_lower_bound(const VehicleParams& vehicle, const WindVector& wind) {
    const double wmag = wind.magnitude();
    if (wmag >= vehicle.v_min) {
        throw std::invalid_argument("rho_lower_bound: need |w| < v_min");
    }
    return (1.0 - wmag / vehicle.v_min) * vehicle.rho_min();
}

double lower_bound(const Pose& s1, const Pose& s2, BoundKind kind, const VehicleParams& vehicle,
                   const WindVector& wind, const GridMap* map) {
    switch (kind) {
        case BoundKind::EuclideanOverVmax:
            return std::hypot(s2.x - s1.x, s2.y - s1.y) / vehicle.v_max;
        case BoundKind::DubinsMinOverVmax:
            return dubins_length(s1, s2, vehicle.rho_min()) / vehicle.v_max;
        case BoundKind::DubinsMinObstacleAware:
            return obstacle_aware_bound(s1, s2, vehicle, map);
        case BoundKind::WindLB1: {
            const double rho = rho_lower_bound(vehicle, wind);
            return dubins_length(s1, s2, rho) / (vehicle.v_max + wind.magnitude());
        }
        case BoundKind::WindLB2: {
            const double rho = rho_lower_bound(vehicle, wind);
            const double len = dubins_length(s1, s2, rho);
            const double dx = s2.x - s1.x;
            const double dy = s2.y - s1.y;
            const double dist = std::hypot(dx, dy);
            // Coincident positions leave the direction undefined; bound the
            // ground speed by the direction-free limit instead.
            const double vg = dist > 0.0 ? ground_speed({dx / dist, dy / dist}, wind, vehicle.v_max)
                                         : vehicle.v_max + wind.magnitude();
            return len / vg;
        }
    }
    throw std::logic_error("lower_bound: unknown kind");
}

GoalHeuristic::GoalHeuristic(const GridMap& map, const Configuration& goal,
                             const VehicleParams& vehicle, const WindVector& wind, BoundKind kind)
    : map_(&map),
      goal_(goal),
      vehicle_(vehicle),
      wind_(wind),
      kind_(kind),
      goal_pose_(configuration_pose(goal, map.cell_size)),
      cache_(lattice_size(map), std::numeric_limits<double>::quiet_NaN()) {
    if ((kind == BoundKind::WindLB1 || kind == BoundKind::WindLB2) &&
        wind.magnitude() >= vehicle.v_min) {
        throw std::invalid_argument("heuristic: wind kinds need |w| < v_min");
    }
    if (kind == BoundKind::DubinsMinObstacleAware) {
        const LatticeEdges edges(vehicle.rho_min(), map.cell_size, map.cell_size / 10.0);
        field_ = dubins_distance_field(map, goal, edges);
    }
}

double GoalHeuristic::operator()(const Configuration& c) const {
    const int idx = configuration_index(c, *map_);
    double& slot = cache_[idx];
    if (!std::isnan(slot)) return slot;
    if (c == goal_) return slot = 0.0;
    if (kind_ == BoundKind::DubinsMinObstacleAware) {
        return slot = field_[idx] == kInfCost ? kInfCost : field_[idx] / vehicle_.v_max;
    }
    const Pose p = configuration_pose(c, map_->cell_size);
    return slot = lower_bound(p, goal_pose_, kind_, vehicle_, wind_, map_);
}

double heuristic_to_goal(const Configuration& s, const Configuration& goal, const GridMap& map,
                         const VehicleParams& vehicle, const WindVector& wind, BoundKind kind) {
    return GoalHeuristic(map, goal, vehicle, wind, kind)(s);
}

}  // namespace tstar
