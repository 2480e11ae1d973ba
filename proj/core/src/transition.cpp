#include "tstar/transition.hpp"

#include <set>
#include <stdexcept>

namespace tstar {

int direction_index(int dcx, int dcy) {
    for (int d = 0; d < 8; ++d) {
        if (kNeighborOffsets[d][0] == dcx && kNeighborOffsets[d][1] == dcy) return d;
    }
    return -1;
}

int transition_triple_id(const Transition& t) {
    const int d = direction_index(t.to.cx - t.from.cx, t.to.cy - t.from.cy);
    if (d < 0) throw std::invalid_argument("transition: target is not an 8-neighbor");
    return d * 64 + t.from.h * 8 + t.to.h;
}

Transition transition_from_triple(int triple_id) {
    const int d = triple_id / 64;
    const int h0 = (triple_id / 8) % 8;
    const int h1 = triple_id % 8;
    Transition t;
    t.from = {0, 0, h0};
    t.to = {kNeighborOffsets[d][0], kNeighborOffsets[d][1], h1};
    return t;
}

namespace {

inline int encode(int d, int h0, int h1) { return d * 64 + h0 * 8 + h1; }

inline int wrap8(int v) { return ((v % 8) + 8) % 8; }

}  // namespace

CanonicalKey canonicalize(const Transition& t, const WindVector& wind) {
    const int id = transition_triple_id(t);
    if (!wind.is_zero()) return {id, false};

    const int d = id / 64;
    const int h0 = (id / 8) % 8;
    const int h1 = id % 8;

    int best = id;
    bool best_mirrored = false;
    // Quarter-turn rotations first so rotations win ties against reflections.
    for (int c = 0; c < 8; c += 2) {
        const int rot = encode(wrap8(d + c), wrap8(h0 + c), wrap8(h1 + c));
        if (rot < best) {
            best = rot;
            best_mirrored = false;
        }
    }
    for (int c = 0; c < 8; c += 2) {
        const int ref = encode(wrap8(c - d), wrap8(c - h0), wrap8(c - h1));
        if (ref < best) {
            best = ref;
            best_mirrored = true;
        }
    }
    return {best, best_mirrored};
}

int canonical_class_count(const WindVector& wind) {
    std::set<int> classes;
    for (int id = 0; id < 512; ++id) {
        classes.insert(canonicalize(transition_from_triple(id), wind).class_id);
    }
    return static_cast<int>(classes.size());
}

std::vector<Transition> successors(const Configuration& c, const GridMap& map) {
    std::vector<Transition> out;
    out.reserve(64);
    for (int d = 0; d < 8; ++d) {
        const int nx = c.cx + kNeighborOffsets[d][0];
        const int ny = c.cy + kNeighborOffsets[d][1];
        if (!map.is_free(nx, ny)) continue;
        for (int h1 = 0; h1 < kNumHeadings; ++h1) {
            out.push_back({c, {nx, ny, h1}});
        }
    }
    return out;
}

}  // namespace tstar
