#pragma once

#include <cstdint>
#include <vector>

#include "tstar/geom.hpp"

namespace tstar {

inline constexpr int kNumHeadings = 8;

/// Heading index (0..7) to angle, multiples of pi/4.
inline double heading_angle(int h) { return h * (kPi / 4.0); }

/// Occupancy grid. Cells are unit squares of edge cell_size; cell (0,0)
/// spans [0, cell_size) x [0, cell_size).
struct GridMap {
    int width = 0;
    int height = 0;
    double cell_size = 1.0;
    std::vector<std::uint8_t> blocked;

    GridMap() = default;
    GridMap(int w, int h, double cs = 1.0)
        : width(w), height(h), cell_size(cs), blocked(static_cast<std::size_t>(w) * h, 0) {}

    bool in_bounds(int cx, int cy) const { return cx >= 0 && cx < width && cy >= 0 && cy < height; }
    bool is_blocked(int cx, int cy) const { return blocked[static_cast<std::size_t>(cy) * width + cx] != 0; }
    bool is_free(int cx, int cy) const { return in_bounds(cx, cy) && !is_blocked(cx, cy); }
    void set_blocked(int cx, int cy, bool b) {
        blocked[static_cast<std::size_t>(cy) * width + cx] = b ? 1 : 0;
    }

    /// True iff the world point lies inside the map and in a free cell.
    bool point_free(double x, double y) const {
        if (x < 0.0 || y < 0.0) return false;
        const int cx = static_cast<int>(x / cell_size);
        const int cy = static_cast<int>(y / cell_size);
        return is_free(cx, cy);
    }
};

/// Discrete grid pose: cell indices plus one of eight headings.
struct Configuration {
    int cx = 0;
    int cy = 0;
    int h = 0;

    bool operator==(const Configuration&) const = default;
};

/// World pose at the center of the configuration's cell.
inline Pose configuration_pose(const Configuration& c, double cell_size) {
    return {(c.cx + 0.5) * cell_size, (c.cy + 0.5) * cell_size, heading_angle(c.h)};
}

/// Flat index over the configuration lattice of a map.
inline int configuration_index(const Configuration& c, const GridMap& map) {
    return (c.cy * map.width + c.cx) * kNumHeadings + c.h;
}

inline int lattice_size(const GridMap& map) { return map.width * map.height * kNumHeadings; }

struct VehicleParams {
    double v_min = 0.5;
    double v_max = 1.0;
    double lat_accel = 1.0;  // lateral acceleration limit K; turn rate obeys |u| <= K/v

    double rho_min() const { return v_min * v_min / lat_accel; }
    double rho_max() const { return v_max * v_max / lat_accel; }
};

struct WindVector {
    double wx = 0.0;
    double wy = 0.0;

    double magnitude() const { return std::hypot(wx, wy); }
    bool is_zero() const { return wx == 0.0 && wy == 0.0; }
};

struct Scenario {
    GridMap map;
    Configuration start;
    Configuration goal;
    VehicleParams vehicle;
    WindVector wind;
    std::uint64_t seed = 0;
};

}  // namespace tstar
