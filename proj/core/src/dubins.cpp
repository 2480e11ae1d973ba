#include "tstar/dubins.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tstar {

namespace {

constexpr double kFeasibilitySlack = 1e-12;
constexpr double kReconstructionTol = 1e-9;

struct Word {
    double t, p, q;  // scaled: t, q arc angles; p straight length / rho (CSC) or middle arc (CCC)
};

// Closed forms for the six words in the normalized frame where the start
// sits at the origin with heading alpha and the goal at (d, 0) with heading
// beta, distances scaled by 1/rho.
std::optional<Word> word_lsl(double d, double a, double b) {
    const double ca = std::cos(a), sa = std::sin(a), cb = std::cos(b), sb = std::sin(b);
    const double tmp = 2.0 + d * d - 2.0 * (ca * cb + sa * sb - d * (sa - sb));
    if (tmp < 0.0) return std::nullopt;
    // Coincident turning circles: the tangent direction is undefined, the
    // path collapses to a single arc around the shared circle.
    if (tmp < 1e-18) return Word{normalize_angle(b - a), std::sqrt(tmp), 0.0};
    const double th = std::atan2(cb - ca, d + sa - sb);
    return Word{normalize_angle(th - a), std::sqrt(tmp), normalize_angle(b - th)};
}

std::optional<Word> word_rsr(double d, double a, double b) {
    const double ca = std::cos(a), sa = std::sin(a), cb = std::cos(b), sb = std::sin(b);
    const double tmp = 2.0 + d * d - 2.0 * (ca * cb + sa * sb - d * (sb - sa));
    if (tmp < 0.0) return std::nullopt;
    if (tmp < 1e-18) return Word{normalize_angle(a - b), std::sqrt(tmp), 0.0};
    const double th = std::atan2(ca - cb, d - sa + sb);
    return Word{normalize_angle(a - th), std::sqrt(tmp), normalize_angle(th - b)};
}

std::optional<Word> word_lsr(double d, double a, double b) {
    const double ca = std::cos(a), sa = std::sin(a), cb = std::cos(b), sb = std::sin(b);
    const double tmp = -2.0 + d * d + 2.0 * (ca * cb + sa * sb + d * (sa + sb));
    if (tmp < 0.0) return std::nullopt;
    const double p = std::sqrt(tmp);
    const double th = std::atan2(-ca - cb, d + sa + sb) - std::atan2(-2.0, p);
    return Word{normalize_angle(th - a), p, normalize_angle(th - b)};
}

std::optional<Word> word_rsl(double d, double a, double b) {
    const double ca = std::cos(a), sa = std::sin(a), cb = std::cos(b), sb = std::sin(b);
    const double tmp = d * d - 2.0 + 2.0 * (ca * cb + sa * sb - d * (sa + sb));
    if (tmp < 0.0) return std::nullopt;
    const double p = std::sqrt(tmp);
    const double th = std::atan2(ca + cb, d - sa - sb) - std::atan2(2.0, p);
    return Word{normalize_angle(a - th), p, normalize_angle(b - th)};
}

// For the CCC words the acos argument works out to 1 - D^2/8 with D the
// scaled distance between the outer circle centers. Feasibility needs
// 0 < D < 4: at the upper end the middle circle no longer fits, at the
// lower end the outer circles coincide and the construction degenerates
// (such paths carry a full extra loop and are dominated by a CSC word).
std::optional<Word> word_rlr(double d, double a, double b) {
    const double ca = std::cos(a), sa = std::sin(a), cb = std::cos(b), sb = std::sin(b);
    const double tmp = 0.125 * (6.0 - d * d + 2.0 * (ca * cb + sa * sb + d * (sa - sb)));
    if (tmp <= -1.0 + kFeasibilitySlack || tmp > 1.0 - kFeasibilitySlack) return std::nullopt;
    const double p = kTwoPi - std::acos(tmp);
    const double th = std::atan2(ca - cb, d - sa + sb);
    const double t = normalize_angle(a - th + 0.5 * p);
    return Word{t, p, normalize_angle(a - b - t + p)};
}

std::optional<Word> word_lrl(double d, double a, double b) {
    const double ca = std::cos(a), sa = std::sin(a), cb = std::cos(b), sb = std::sin(b);
    const double tmp = 0.125 * (6.0 - d * d + 2.0 * (ca * cb + sa * sb - d * (sa - sb)));
    if (tmp <= -1.0 + kFeasibilitySlack || tmp > 1.0 - kFeasibilitySlack) return std::nullopt;
    const double p = kTwoPi - std::acos(tmp);
    const double th = std::atan2(-ca + cb, d + sa - sb);
    const double t = normalize_angle(th - a + 0.5 * p);
    return Word{t, p, normalize_angle(b - a - t + p)};
}

std::optional<Word> make_word(DubinsType type, double d, double a, double b) {
    switch (type) {
        case DubinsType::LSL: return word_lsl(d, a, b);
        case DubinsType::RSR: return word_rsr(d, a, b);
        case DubinsType::LSR: return word_lsr(d, a, b);
        case DubinsType::RSL: return word_rsl(d, a, b);
        case DubinsType::RLR: return word_rlr(d, a, b);
        case DubinsType::LRL: return word_lrl(d, a, b);
    }
    return std::nullopt;
}

Pose advance(const Pose& p, int turn, double rho, double measure) {
    if (turn == 0) {
        return {p.x + measure * std::cos(p.theta), p.y + measure * std::sin(p.theta), p.theta};
    }
    const double phi = turn > 0 ? measure : -measure;
    const double nt = p.theta + phi;
    if (turn > 0) {
        const double cx = p.x - rho * std::sin(p.theta);
        const double cy = p.y + rho * std::cos(p.theta);
        return {cx + rho * std::sin(nt), cy - rho * std::cos(nt), nt};
    }
    const double cx = p.x + rho * std::sin(p.theta);
    const double cy = p.y - rho * std::cos(p.theta);
    return {cx - rho * std::sin(nt), cy + rho * std::cos(nt), nt};
}

}  // namespace

const char* dubins_type_name(DubinsType t) {
    switch (t) {
        case DubinsType::LSL: return "LSL";
        case DubinsType::RSR: return "RSR";
        case DubinsType::LSR: return "LSR";
        case DubinsType::RSL: return "RSL";
        case DubinsType::RLR: return "RLR";
        case DubinsType::LRL: return "LRL";
    }
    return "?";
}

int dubins_turn(DubinsType t, int segment) {
    static constexpr int kTurns[6][3] = {
        {+1, 0, +1},   // LSL
        {-1, 0, -1},   // RSR
        {+1, 0, -1},   // LSR
        {-1, 0, +1},   // RSL
        {-1, +1, -1},  // RLR
        {+1, -1, +1},  // LRL
    };
    return kTurns[static_cast<int>(t)][segment];
}

double DubinsPath::length() const {
    const bool ccc = type == DubinsType::RLR || type == DubinsType::LRL;
    if (ccc) return (seg[0] + seg[1] + seg[2]) * rho;
    return (seg[0] + seg[2]) * rho + seg[1];
}

double path_length(const DubinsPath& p) { return p.length(); }

Pose dubins_pose_at(const DubinsPath& p, double s) {
    s = std::clamp(s, 0.0, p.length());
    Pose cur = p.start;
    for (int i = 0; i < 3; ++i) {
        const int turn = dubins_turn(p.type, i);
        const double seg_len = turn == 0 ? p.seg[i] : p.seg[i] * p.rho;
        if (s <= seg_len) {
            const double measure = turn == 0 ? s : s / p.rho;
            return advance(cur, turn, p.rho, measure);
        }
        cur = advance(cur, turn, p.rho, p.seg[i]);
        s -= seg_len;
    }
    return cur;
}

Pose dubins_endpoint(const DubinsPath& p) {
    Pose cur = p.start;
    for (int i = 0; i < 3; ++i) cur = advance(cur, dubins_turn(p.type, i), p.rho, p.seg[i]);
    return cur;
}

std::optional<DubinsPath> dubins_candidate(const Pose& q0, const Pose& q1, double rho,
                                           DubinsType type) {
    if (!(rho > 0.0)) throw std::invalid_argument("dubins: rho must be positive");
    const double dx = q1.x - q0.x;
    const double dy = q1.y - q0.y;
    const double dist = std::hypot(dx, dy);
    const double phi = dist > 0.0 ? std::atan2(dy, dx) : 0.0;
    const double d = dist / rho;
    const double a = normalize_angle(q0.theta - phi);
    const double b = normalize_angle(q1.theta - phi);

    // Coincident poses: the closed forms degenerate to a full 2pi loop, but
    // the zero path is the true optimum.
    if (d < 1e-12 && std::fabs(angle_diff(q0.theta, q1.theta)) < 1e-12) {
        DubinsPath zero;
        zero.type = type;
        zero.rho = rho;
        zero.start = q0;
        zero.seg = {0.0, 0.0, 0.0};
        return zero;
    }

    const auto w = make_word(type, d, a, b);
    if (!w) return std::nullopt;

    DubinsPath path;
    path.type = type;
    path.rho = rho;
    path.start = q0;
    const bool ccc = type == DubinsType::RLR || type == DubinsType::LRL;
    path.seg = {w->t, ccc ? w->p : w->p * rho, w->q};

    // Reject numerically inconsistent constructions instead of returning a
    // path that does not actually reach the goal.
    const Pose end = dubins_endpoint(path);
    const double pos_err = std::hypot(end.x - q1.x, end.y - q1.y);
    const double ang_err = std::fabs(angle_diff(end.theta, q1.theta));
    const double scale = std::max({1.0, rho, dist});
    if (pos_err > kReconstructionTol * scale || ang_err > kReconstructionTol) return std::nullopt;
    return path;
}

std::vector<DubinsPath> dubins_candidates(const Pose& q0, const Pose& q1, double rho) {
    std::vector<DubinsPath> out;
    out.reserve(6);
    for (DubinsType t : kDubinsTypes) {
        if (auto c = dubins_candidate(q0, q1, rho, t)) out.push_back(*c);
    }
    return out;
}

DubinsPath dubins_shortest(const Pose& q0, const Pose& q1, double rho) {
    const auto cands = dubins_candidates(q0, q1, rho);
    if (cands.empty()) throw std::runtime_error("dubins: no feasible candidate");
    const DubinsPath* best = &cands[0];
    for (const auto& c : cands) {
        if (c.length() < best->length()) best = &c;
    }
    return *best;
}

double dubins_length(const Pose& q0, const Pose& q1, double rho) {
    return dubins_shortest(q0, q1, rho).length();
}

std::vector<Pose> sample_path(const DubinsPath& p, double ds) {
    if (!(ds > 0.0)) throw std::invalid_argument("sample_path: ds must be positive");
    const double len = p.length();
    if (len <= 0.0) return {p.start};
    const int n = static_cast<int>(std::ceil(len / ds));
    std::vector<Pose> out;
    out.reserve(n + 1);
    for (int i = 0; i <= n; ++i) out.push_back(dubins_pose_at(p, len * i / n));
    return out;
}

}  // namespace tstar
