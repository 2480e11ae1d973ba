#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tstar/dubins.hpp"
#include "tstar/grid.hpp"
#include "tstar/lattice.hpp"

namespace tstar {

/// Cheap admissible estimates of travel time between poses.
enum class BoundKind {
    EuclideanOverVmax,
    DubinsMinOverVmax,
    DubinsMinObstacleAware,
    WindLB1,
    WindLB2,
};

const char* bound_kind_name(BoundKind k);

/// The default estimate: minimum-speed Dubins length over v_max in still
/// air, the direction-aware wind bound otherwise.
inline BoundKind default_bound_kind(const WindVector& wind) {
    return wind.is_zero() ? BoundKind::DubinsMinOverVmax : BoundKind::WindLB2;
}

/// Best achievable ground speed along unit direction d: the wind component
/// in flight direction plus the air contribution, by the cosine rule.
/// Requires |w| < v_max; returns v_max exactly in still air.
double ground_speed(const Vec2& d, const WindVector& wind, double v_max);

/// Tightest ground-frame turning radius under wind: (1 - |w|/v_min) * rho_min.
double rho_lower_bound(const VehicleParams& vehicle, const WindVector& wind);

/// Lower bound on the travel time between two poses. The wind kinds divide
/// the Dubins length at the wind-shrunk radius by an upper bound on ground
/// speed and require |w| < v_min; the static kinds are defined for still
/// air and ignore the wind argument. The obstacle-aware kind routes over
/// the configuration lattice and needs a map; for poses that are not
/// lattice configurations it falls back to the free-space Dubins bound.
/// In still air WindLB1 and WindLB2 both reduce exactly to
/// DubinsMinOverVmax.
double lower_bound(const Pose& s1, const Pose& s2, BoundKind kind, const VehicleParams& vehicle,
                   const WindVector& wind, const GridMap* map = nullptr);

/// Per-goal heuristic. Values are cached per configuration; the obstacle-
/// aware kind builds its backward lattice distance field once up front.
class GoalHeuristic {
  public:
    GoalHeuristic(const GridMap& map, const Configuration& goal, const VehicleParams& vehicle,
                  const WindVector& wind, BoundKind kind);

    double operator()(const Configuration& c) const;

    BoundKind kind() const { return kind_; }

  private:
    const GridMap* map_;
    Configuration goal_;
    VehicleParams vehicle_;
    WindVector wind_;
    BoundKind kind_;
    Pose goal_pose_;
    std::vector<double> field_;           // obstacle-aware distances, else empty
    mutable std::vector<double> cache_;   // per-configuration memo, NaN = unset
};

/// Admissible estimate of the remaining cost from a configuration to the
/// goal. Default kind: DubinsMinOverVmax in still air, WindLB2 under wind.
double heuristic_to_goal(const Configuration& s, const Configuration& goal, const GridMap& map,
                         const VehicleParams& vehicle, const WindVector& wind, BoundKind kind);

}  // namespace tstar
