#pragma once

#include <vector>

#include "tstar/geom.hpp"
#include "tstar/grid.hpp"

namespace tstar {

enum class SegmentKind { Straight, Arc };

/// One piece of a maneuver, flown at a fixed airspeed. Arcs carry their
/// turn direction (+1 left, -1 right), angle in radians and radius; the
/// radius always equals speed^2 / K so the turn-rate limit is tight.
struct Segment {
    SegmentKind kind = SegmentKind::Straight;
    int turn = 0;
    double measure = 0.0;  // straight: length (world units); arc: angle (rad)
    double speed = 1.0;
    double radius = 0.0;

    double air_length() const { return kind == SegmentKind::Straight ? measure : measure * radius; }
    double time() const { return air_length() / speed; }
};

/// Continuous realization of a transition: arc/straight segments in the air
/// frame. Under wind the ground trace is the air trace drifted by w*t; the
/// duration is unaffected because speeds are airspeeds.
struct Maneuver {
    std::vector<Segment> segments;

    double total_time() const;
    double air_length() const;
};

/// Sample along a maneuver: ground position, air heading, elapsed time and
/// the airspeed of the active segment.
struct ManeuverSample {
    Pose pose;
    double t = 0.0;
    double speed = 0.0;
};

/// Air-frame pose after flying the whole maneuver from start (no drift).
Pose maneuver_air_endpoint(const Maneuver& m, const Pose& start);

/// Ground pose after flying the maneuver from start under constant wind.
Pose maneuver_ground_endpoint(const Maneuver& m, const Pose& start, const WindVector& wind);

/// Ground-frame samples spaced at most ds apart (start and end included).
std::vector<ManeuverSample> sample_maneuver(const Maneuver& m, const Pose& start,
                                            const WindVector& wind, double ds);

/// The maneuver reflected across the flight line: turn directions flip,
/// measures and speeds are unchanged.
Maneuver mirrored(const Maneuver& m);

/// True iff every sampled ground point lies in a free in-bounds cell.
/// Sampling step defaults to cell_size / 10.
bool collision_free(const Maneuver& m, const Pose& start, const WindVector& wind,
                    const GridMap& map);
bool collision_free(const Maneuver& m, const Pose& start, const WindVector& wind,
                    const GridMap& map, double ds);

}  // namespace tstar
