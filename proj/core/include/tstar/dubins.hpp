#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tstar/geom.hpp"

namespace tstar {

enum class DubinsType { LSL = 0, RSR = 1, LSR = 2, RSL = 3, RLR = 4, LRL = 5 };

inline constexpr std::array<DubinsType, 6> kDubinsTypes = {
    DubinsType::LSL, DubinsType::RSR, DubinsType::LSR,
    DubinsType::RSL, DubinsType::RLR, DubinsType::LRL};

const char* dubins_type_name(DubinsType t);

/// Turn direction of segment i for a given path type: +1 left, -1 right,
/// 0 straight.
int dubins_turn(DubinsType t, int segment);

/// Shortest path of one fixed word between two oriented poses under a
/// minimum turning radius. Segment parameters are stored unscaled: arc
/// segments hold their angle in radians, the straight segment holds its
/// length in world units.
struct DubinsPath {
    DubinsType type = DubinsType::LSL;
    std::array<double, 3> seg = {0.0, 0.0, 0.0};
    double rho = 1.0;
    Pose start;

    double length() const;
};

double path_length(const DubinsPath& p);

/// Pose after traveling arc-length s along the path (s clamped to [0, length]).
Pose dubins_pose_at(const DubinsPath& p, double s);

/// Endpoint of the path; equals dubins_pose_at(p, length).
Pose dubins_endpoint(const DubinsPath& p);

/// All feasible candidates of the six types for the given poses and radius.
/// Candidates whose endpoint reconstruction misses the goal by more than
/// 1e-9 are dropped. Order follows kDubinsTypes.
std::vector<DubinsPath> dubins_candidates(const Pose& q0, const Pose& q1, double rho);

/// Single candidate of one type, if feasible.
std::optional<DubinsPath> dubins_candidate(const Pose& q0, const Pose& q1, double rho,
                                           DubinsType type);

/// Minimum-length path among the six types. Ties broken by the fixed order
/// LSL < RSR < LSR < RSL < RLR < LRL. rho must be positive.
DubinsPath dubins_shortest(const Pose& q0, const Pose& q1, double rho);

/// Convenience: length of the shortest path.
double dubins_length(const Pose& q0, const Pose& q1, double rho);

/// Poses spaced at most ds apart along the path, endpoints included.
std::vector<Pose> sample_path(const DubinsPath& p, double ds);

}  // namespace tstar
