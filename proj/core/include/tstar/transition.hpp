#pragma once

#include <array>
#include <vector>

#include "tstar/grid.hpp"

namespace tstar {

/// Neighbor offsets indexed by direction d; the move direction angle is
/// d * pi/4, matching the heading convention.
inline constexpr std::array<std::array<int, 2>, 8> kNeighborOffsets = {{
    {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1},
}};

/// Direction index for a unit-cell offset, or -1 if not an 8-neighbor move.
int direction_index(int dcx, int dcy);

/// One grid step: an ordered pair of configurations one cell apart.
struct Transition {
    Configuration from;
    Configuration to;

    bool operator==(const Transition&) const = default;
};

/// Compact shape id of a transition: direction * 64 + from-heading * 8 +
/// to-heading. Translation-invariant; 512 distinct values.
int transition_triple_id(const Transition& t);

/// Inverse of transition_triple_id, anchored at from-cell (0,0).
Transition transition_from_triple(int triple_id);

/// Equivalence class of a transition plus the information needed to map a
/// cached maneuver of the class representative back onto the query.
struct CanonicalKey {
    int class_id = 0;      // triple id of the class representative
    bool mirrored = false; // query maps onto the representative via a reflection

    bool operator==(const CanonicalKey& o) const { return class_id == o.class_id; }
};

/// Zero wind: the representative is the lexicographically smallest image of
/// (direction, from-heading, to-heading) under the symmetries of the square
/// grid (rotations by multiples of 90 degrees and the four reflections),
/// applied jointly to the displacement and both headings. This folds the 512
/// transition shapes into 68 classes. Under nonzero wind no two transitions
/// are interchangeable and the key is the identity on the triple.
CanonicalKey canonicalize(const Transition& t, const WindVector& wind);

int canonical_class_count(const WindVector& wind);

/// All valid transitions out of a configuration: one per free in-bounds
/// neighbor cell and target heading, at most 64.
std::vector<Transition> successors(const Configuration& c, const GridMap& map);

}  // namespace tstar
