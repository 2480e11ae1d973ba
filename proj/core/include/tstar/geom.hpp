#pragma once

#include <cmath>
#include <numbers>

namespace tstar {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kPi = std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

/// Planar pose: position plus heading, heading normalized to [0, 2pi).
struct Pose {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;

    Vec2 position() const { return {x, y}; }
};

/// Reduce an angle into [0, 2pi). Values within 1e-11 of a full turn snap
/// to zero so that arc parameters stay free of spurious 2pi windings.
inline double normalize_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r < 1e-11 || kTwoPi - r < 1e-11) r = 0.0;
    return r;
}

/// Signed smallest difference a-b wrapped into (-pi, pi].
inline double angle_diff(double a, double b) {
    double d = std::fmod(a - b, kTwoPi);
    if (d <= -kPi) d += kTwoPi;
    if (d > kPi) d -= kTwoPi;
    return d;
}

inline Vec2 heading_vector(double theta) { return {std::cos(theta), std::sin(theta)}; }

}  // namespace tstar
