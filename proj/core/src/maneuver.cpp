#include "tstar/maneuver.hpp"

#include <cmath>
#include <stdexcept>

namespace tstar {

namespace {

Pose advance_air(const Pose& p, const Segment& s, double fraction) {
    const double measure = s.measure * fraction;
    if (s.kind == SegmentKind::Straight) {
        return {p.x + measure * std::cos(p.theta), p.y + measure * std::sin(p.theta), p.theta};
    }
    const double phi = s.turn > 0 ? measure : -measure;
    const double nt = p.theta + phi;
    if (s.turn > 0) {
        const double cx = p.x - s.radius * std::sin(p.theta);
        const double cy = p.y + s.radius * std::cos(p.theta);
        return {cx + s.radius * std::sin(nt), cy - s.radius * std::cos(nt), nt};
    }
    const double cx = p.x + s.radius * std::sin(p.theta);
    const double cy = p.y - s.radius * std::cos(p.theta);
    return {cx - s.radius * std::sin(nt), cy + s.radius * std::cos(nt), nt};
}

}  // namespace

double Maneuver::total_time() const {
    double t = 0.0;
    for (const auto& s : segments) t += s.time();
    return t;
}

double Maneuver::air_length() const {
    double l = 0.0;
    for (const auto& s : segments) l += s.air_length();
    return l;
}

Pose maneuver_air_endpoint(const Maneuver& m, const Pose& start) {
    Pose cur = start;
    for (const auto& s : m.segments) cur = advance_air(cur, s, 1.0);
    return cur;
}

Pose maneuver_ground_endpoint(const Maneuver& m, const Pose& start, const WindVector& wind) {
    const Pose air = maneuver_air_endpoint(m, start);
    const double t = m.total_time();
    return {air.x + wind.wx * t, air.y + wind.wy * t, air.theta};
}

std::vector<ManeuverSample> sample_maneuver(const Maneuver& m, const Pose& start,
                                            const WindVector& wind, double ds) {
    if (!(ds > 0.0)) throw std::invalid_argument("sample_maneuver: ds must be positive");
    std::vector<ManeuverSample> out;
    Pose cur = start;
    double elapsed = 0.0;
    out.push_back({cur, 0.0, m.segments.empty() ? 0.0 : m.segments.front().speed});
    const double wmag = wind.magnitude();
    for (const auto& s : m.segments) {
        const double len = s.air_length();
        if (len <= 0.0) continue;
        // Ground spacing can exceed air spacing by (v + |w|) / v; shrink the
        // air step accordingly so ground samples stay within ds.
        const double air_step = ds * s.speed / (s.speed + wmag);
        const int n = std::max(1, static_cast<int>(std::ceil(len / air_step)));
        for (int i = 1; i <= n; ++i) {
            Pose air = advance_air(cur, s, static_cast<double>(i) / n);
            const double t = elapsed + (len * i / n) / s.speed;
            out.push_back({{air.x + wind.wx * t, air.y + wind.wy * t, air.theta}, t, s.speed});
        }
        cur = advance_air(cur, s, 1.0);
        elapsed += s.time();
    }
    return out;
}

Maneuver mirrored(const Maneuver& m) {
    Maneuver out = m;
    for (auto& s : out.segments) s.turn = -s.turn;
    return out;
}

bool collision_free(const Maneuver& m, const Pose& start, const WindVector& wind,
                    const GridMap& map) {
    return collision_free(m, start, wind, map, map.cell_size / 10.0);
}

bool collision_free(const Maneuver& m, const Pose& start, const WindVector& wind,
                    const GridMap& map, double ds) {
    for (const auto& s : sample_maneuver(m, start, wind, ds)) {
        if (!map.point_free(s.pose.x, s.pose.y)) return false;
    }
    return true;
}

}  // namespace tstar
