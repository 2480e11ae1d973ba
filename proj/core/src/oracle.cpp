#include "tstar/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include <json.hpp>

#include "tstar/dubins.hpp"

namespace tstar {

namespace {

constexpr double kDriftTol = 1e-10;
constexpr int kDriftMaxIter = 200;
constexpr double kEndpointTol = 1e-6;
constexpr int kSimplexMaxIter = 200;
constexpr double kSimplexFtol = 1e-9;

struct Candidate {
    double time = 0.0;
    Maneuver maneuver;
};

void push_arc(Maneuver& m, int turn, double angle, double speed, double radius) {
    if (angle <= 1e-12) return;
    m.segments.push_back({SegmentKind::Arc, turn, angle, speed, radius});
}

void push_straight(Maneuver& m, double length, double speed) {
    if (length <= 1e-12) return;
    m.segments.push_back({SegmentKind::Straight, 0, length, speed, 0.0});
}

Maneuver maneuver_from_dubins(const DubinsPath& p, double arc_speed, double arc_radius,
                              double straight_speed) {
    Maneuver m;
    for (int i = 0; i < 3; ++i) {
        const int turn = dubins_turn(p.type, i);
        if (turn == 0) {
            push_straight(m, p.seg[i], straight_speed);
        } else {
            push_arc(m, turn, p.seg[i], arc_speed, arc_radius);
        }
    }
    return m;
}

/// CSC path between two oriented poses with independent arc radii. The
/// tangent line admits up to two solutions; both are returned when the
/// reconstructed endpoint matches the goal.
struct CscArcs {
    double a1 = 0.0;  // first arc angle
    double s = 0.0;   // straight length
    double a2 = 0.0;  // second arc angle
};

int csc_two_radius(const Pose& q0, const Pose& q1, int turn1, int turn2, double r1, double r2,
                   std::array<CscArcs, 2>& out) {
    const Vec2 c1{q0.x - turn1 * r1 * std::sin(q0.theta), q0.y + turn1 * r1 * std::cos(q0.theta)};
    const Vec2 c2{q1.x - turn2 * r2 * std::sin(q1.theta), q1.y + turn2 * r2 * std::cos(q1.theta)};
    const Vec2 D = c2 - c1;
    const double d = D.norm();
    int count = 0;

    if (turn1 == turn2 && d < 1e-12) {
        // Shared circle: a single arc joins the poses.
        const double a = turn1 > 0 ? normalize_angle(q1.theta - q0.theta)
                                   : normalize_angle(q0.theta - q1.theta);
        out[count++] = {a, 0.0, 0.0};
        return count;
    }
    if (d < 1e-12) return 0;

    const double phi = std::atan2(D.y, D.x);
    // Outer tangent for equal turn directions (normal offset r1 - r2),
    // inner tangent otherwise (normal offset r1 + r2).
    const double offset = turn1 == turn2 ? (r1 - r2) : (r1 + r2);
    const double val = offset / d;
    if (std::fabs(val) > 1.0) return 0;
    const double delta = std::acos(std::clamp(val, -1.0, 1.0));

    for (const double sign : {1.0, -1.0}) {
        const double psi = phi + sign * delta;
        const Vec2 n{std::cos(psi), std::sin(psi)};
        // Travel direction at the tangent point of the first circle.
        const Vec2 tdir = turn1 > 0 ? Vec2{-n.y, n.x} : Vec2{n.y, -n.x};
        const double s = D.dot(tdir);
        if (s < -1e-9) continue;
        const double theta_t = std::atan2(tdir.y, tdir.x);
        const double a1 = turn1 > 0 ? normalize_angle(theta_t - q0.theta)
                                    : normalize_angle(q0.theta - theta_t);
        const double a2 = turn2 > 0 ? normalize_angle(q1.theta - theta_t)
                                    : normalize_angle(theta_t - q1.theta);

        // Validate by walking the segments; the wrong tangent branch fails.
        Pose p = q0;
        p.theta = q0.theta + turn1 * a1;
        const Vec2 tp1{c1.x + r1 * turn1 * std::sin(p.theta),
                       c1.y - r1 * turn1 * std::cos(p.theta)};
        const Vec2 tp2{tp1.x + std::max(s, 0.0) * std::cos(p.theta),
                       tp1.y + std::max(s, 0.0) * std::sin(p.theta)};
        const double end_theta = p.theta + turn2 * a2;
        const Vec2 cc{tp2.x - turn2 * r2 * std::sin(p.theta),
                      tp2.y + turn2 * r2 * std::cos(p.theta)};
        const Vec2 end{cc.x + r2 * turn2 * std::sin(end_theta),
                       cc.y - r2 * turn2 * std::cos(end_theta)};
        const double scale = std::max({1.0, r1, r2, d});
        if (std::hypot(end.x - q1.x, end.y - q1.y) > 1e-9 * scale) continue;
        if (std::fabs(angle_diff(end_theta, q1.theta)) > 1e-9) continue;
        out[count++] = {a1, std::max(s, 0.0), a2};
    }
    return count;
}

/// Builds a candidate maneuver toward a (possibly drift-shifted) goal pose.
using Builder = std::function<std::optional<Candidate>(const Pose&)>;

/// Under wind the air-frame goal recedes by w * T where T is the maneuver's
/// own duration. dur(T) is a contraction because the goal drifts slower than
/// the vehicle flies (|w| < v_min), so the fixed point is unique; iterate
/// until the time matches to 1e-10.
std::optional<Candidate> solve_with_drift(const Builder& build, const Pose& goal,
                                          const WindVector& wind) {
    if (wind.is_zero()) return build(goal);
    double t = 0.0;
    std::optional<Candidate> cand;
    for (int it = 0; it < kDriftMaxIter; ++it) {
        const Pose target{goal.x - wind.wx * t, goal.y - wind.wy * t, goal.theta};
        cand = build(target);
        if (!cand) return std::nullopt;
        const double nt = cand->time;
        if (std::fabs(nt - t) < kDriftTol) return cand;
        t = nt;
    }
    return std::nullopt;
}

constexpr double kInfObjective = 1e30;

/// Minimal two-variable Nelder-Mead with standard coefficients. Runs until
/// the simplex spread in f drops below kSimplexFtol or the iteration budget
/// is exhausted; writes the best vertex into (bx, by) and returns its value.
template <typename F>
double nelder_mead_2d(const F& f, double x0, double y0, double step, double& bx, double& by) {
    std::array<std::array<double, 2>, 3> x = {{{x0, y0}, {x0 + step, y0}, {x0, y0 + step}}};
    std::array<double, 3> fx = {f(x[0][0], x[0][1]), f(x[1][0], x[1][1]), f(x[2][0], x[2][1])};

    const auto order = [&] {
        std::array<int, 3> idx = {0, 1, 2};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fx[a] < fx[b]; });
        return idx;
    };

    for (int it = 0; it < kSimplexMaxIter; ++it) {
        const auto idx = order();
        const int lo = idx[0], mi = idx[1], hi = idx[2];
        if (fx[hi] - fx[lo] < kSimplexFtol) break;

        const double cx = 0.5 * (x[lo][0] + x[mi][0]);
        const double cy = 0.5 * (x[lo][1] + x[mi][1]);
        const double rx = cx + (cx - x[hi][0]);
        const double ry = cy + (cy - x[hi][1]);
        const double fr = f(rx, ry);

        if (fr < fx[lo]) {
            const double ex = cx + 2.0 * (cx - x[hi][0]);
            const double ey = cy + 2.0 * (cy - x[hi][1]);
            const double fe = f(ex, ey);
            if (fe < fr) {
                x[hi] = {ex, ey};
                fx[hi] = fe;
            } else {
                x[hi] = {rx, ry};
                fx[hi] = fr;
            }
        } else if (fr < fx[mi]) {
            x[hi] = {rx, ry};
            fx[hi] = fr;
        } else {
            const double kx = cx + 0.5 * (x[hi][0] - cx);
            const double ky = cy + 0.5 * (x[hi][1] - cy);
            const double fk = f(kx, ky);
            if (fk < fx[hi]) {
                x[hi] = {kx, ky};
                fx[hi] = fk;
            } else {
                // Shrink toward the best vertex.
                for (int i : {mi, hi}) {
                    x[i][0] = x[lo][0] + 0.5 * (x[i][0] - x[lo][0]);
                    x[i][1] = x[lo][1] + 0.5 * (x[i][1] - x[lo][1]);
                    fx[i] = f(x[i][0], x[i][1]);
                }
            }
        }
    }
    const auto idx = order();
    bx = x[idx[0]][0];
    by = x[idx[0]][1];
    return fx[idx[0]];
}

struct FamilyContext {
    Pose q0;
    Pose q1;
    VehicleParams vp;
    WindVector wind;
};

void consider(std::optional<Candidate>& best, const std::optional<Candidate>& c) {
    if (!c) return;
    if (!best || c->time < best->time) best = c;
}

/// Families (a), (b): single-speed Dubins at an extreme radius; family (c):
/// the same minimum-radius geometry with straights flown at full speed.
void add_dubins_families(const FamilyContext& ctx, std::optional<Candidate>& best) {
    struct Combo {
        double rho, arc_speed, straight_speed;
    };
    const double rmin = ctx.vp.rho_min();
    const double rmax = ctx.vp.rho_max();
    std::vector<Combo> combos = {{rmin, ctx.vp.v_min, ctx.vp.v_min},
                                 {rmin, ctx.vp.v_min, ctx.vp.v_max}};
    if (rmax != rmin) combos.push_back({rmax, ctx.vp.v_max, ctx.vp.v_max});

    for (const Combo& combo : combos) {
        for (DubinsType type : kDubinsTypes) {
            const Builder build = [&](const Pose& target) -> std::optional<Candidate> {
                const auto path = dubins_candidate(ctx.q0, target, combo.rho, type);
                if (!path) return std::nullopt;
                Maneuver m = maneuver_from_dubins(*path, combo.arc_speed, combo.rho,
                                                  combo.straight_speed);
                return Candidate{m.total_time(), std::move(m)};
            };
            consider(best, solve_with_drift(build, ctx.q1, ctx.wind));
        }
    }
}

/// Family (d): CSC with both arc radii free in [rho_min, rho_max] and arc
/// speeds tied to the radii, refined by Nelder-Mead from five fixed starts.
void add_csc_refinement(const FamilyContext& ctx, std::optional<Candidate>& best) {
    const double rmin = ctx.vp.rho_min();
    const double rmax = ctx.vp.rho_max();
    if (rmax - rmin < 1e-12) return;
    const double K = ctx.vp.lat_accel;

    static constexpr std::array<std::array<int, 2>, 4> kTurnPairs = {{
        {+1, +1}, {-1, -1}, {+1, -1}, {-1, +1},
    }};

    for (const auto& turns : kTurnPairs) {
        const auto eval = [&](double r1, double r2) -> std::optional<Candidate> {
            r1 = std::clamp(r1, rmin, rmax);
            r2 = std::clamp(r2, rmin, rmax);
            const double v1 = std::sqrt(K * r1);
            const double v2 = std::sqrt(K * r2);
            const Builder build = [&](const Pose& target) -> std::optional<Candidate> {
                std::array<CscArcs, 2> arcs;
                const int n = csc_two_radius(ctx.q0, target, turns[0], turns[1], r1, r2, arcs);
                std::optional<Candidate> local;
                for (int i = 0; i < n; ++i) {
                    Maneuver m;
                    push_arc(m, turns[0], arcs[i].a1, v1, r1);
                    push_straight(m, arcs[i].s, ctx.vp.v_max);
                    push_arc(m, turns[1], arcs[i].a2, v2, r2);
                    consider(local, Candidate{m.total_time(), std::move(m)});
                }
                return local;
            };
            return solve_with_drift(build, ctx.q1, ctx.wind);
        };

        const auto objective = [&](double r1, double r2) {
            const auto c = eval(r1, r2);
            return c ? c->time : kInfObjective;
        };

        const double mid = 0.5 * (rmin + rmax);
        const std::array<std::array<double, 2>, 5> starts = {{
            {rmin, rmin}, {rmax, rmax}, {rmin, rmax}, {rmax, rmin}, {mid, mid},
        }};
        const double step = 0.25 * (rmax - rmin);

        for (const auto& start : starts) {
            double bx = start[0], by = start[1];
            double bf = nelder_mead_2d(objective, start[0], start[1], step, bx, by);
            if (bf >= kInfObjective) continue;
            consider(best, eval(bx, by));
        }
    }
}

}  // namespace

Pose transition_start_pose(const Transition& t, double cell_size) {
    return configuration_pose(t.from, cell_size);
}

Pose transition_goal_pose(const Transition& t, double cell_size) {
    return configuration_pose(t.to, cell_size);
}

TransitionCostResult true_cost(const Transition& t, const VehicleParams& vehicle,
                               const WindVector& wind, double cell_size) {
    if (wind.magnitude() >= vehicle.v_min) {
        throw std::invalid_argument("true_cost: wind magnitude must stay below v_min");
    }
    FamilyContext ctx{transition_start_pose(t, cell_size), transition_goal_pose(t, cell_size),
                      vehicle, wind};
    std::optional<Candidate> best;
    add_dubins_families(ctx, best);
    add_csc_refinement(ctx, best);
    if (!best) throw std::runtime_error("true_cost: no candidate closed the transition");

    const Pose end = maneuver_ground_endpoint(best->maneuver, ctx.q0, wind);
    if (std::hypot(end.x - ctx.q1.x, end.y - ctx.q1.y) > kEndpointTol ||
        std::fabs(angle_diff(end.theta, ctx.q1.theta)) > kEndpointTol) {
        throw std::runtime_error("true_cost: best candidate fails endpoint reconstruction");
    }
    return {best->time, std::move(best->maneuver)};
}

bool TransitionCache::contains(int class_id) const {
    std::shared_lock lock(mutex_);
    return entries_.find(class_id) != entries_.end();
}

const TransitionCache::Entry* TransitionCache::find(int class_id) const {
    std::shared_lock lock(mutex_);
    const auto it = entries_.find(class_id);
    return it == entries_.end() ? nullptr : &it->second;
}

std::pair<const TransitionCache::Entry*, bool> TransitionCache::get_or_compute(
    int class_id, const std::function<Entry()>& compute) {
    if (const Entry* hit = find(class_id)) return {hit, false};
    // Compute outside the lock; concurrent duplicates are resolved by the
    // first writer, losers adopt the published entry.
    Entry fresh = compute();
    std::unique_lock lock(mutex_);
    const auto [it, inserted] = entries_.try_emplace(class_id, std::move(fresh));
    if (inserted) computed_.fetch_add(1, std::memory_order_relaxed);
    return {&it->second, inserted};
}

std::size_t TransitionCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

long TransitionCache::compute_count() const { return computed_.load(std::memory_order_relaxed); }

std::string TransitionCache::dump_json(const VehicleParams& vehicle, const WindVector& wind,
                                       double cell_size) const {
    nlohmann::json j;
    j["v_min"] = vehicle.v_min;
    j["v_max"] = vehicle.v_max;
    j["K"] = vehicle.lat_accel;
    j["wind"] = {wind.wx, wind.wy};
    j["cell_size"] = cell_size;
    nlohmann::json entries = nlohmann::json::object();
    std::shared_lock lock(mutex_);
    for (const auto& [id, entry] : entries_) {
        nlohmann::json segs = nlohmann::json::array();
        for (const auto& s : entry.maneuver.segments) {
            segs.push_back({s.kind == SegmentKind::Arc ? "arc" : "straight", s.turn, s.measure,
                            s.speed, s.radius});
        }
        entries[std::to_string(id)] = {{"cost", entry.cost}, {"segments", segs}};
    }
    j["entries"] = entries;
    return j.dump(2) + "\n";
}

void TransitionCache::load_json(const std::string& text, const VehicleParams& vehicle,
                                const WindVector& wind, double cell_size) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("cache: invalid JSON: ") + e.what());
    }
    try {
        if (j.at("v_min").get<double>() != vehicle.v_min ||
            j.at("v_max").get<double>() != vehicle.v_max ||
            j.at("K").get<double>() != vehicle.lat_accel ||
            j.at("wind")[0].get<double>() != wind.wx ||
            j.at("wind")[1].get<double>() != wind.wy ||
            j.at("cell_size").get<double>() != cell_size) {
            throw std::runtime_error("cache: dump was produced for different session parameters");
        }
        std::unique_lock lock(mutex_);
        for (const auto& [key, val] : j.at("entries").items()) {
            Entry e;
            e.cost = val.at("cost").get<double>();
            for (const auto& seg : val.at("segments")) {
                Segment s;
                s.kind = seg[0].get<std::string>() == "arc" ? SegmentKind::Arc
                                                            : SegmentKind::Straight;
                s.turn = seg[1].get<int>();
                s.measure = seg[2].get<double>();
                s.speed = seg[3].get<double>();
                s.radius = seg[4].get<double>();
                e.maneuver.segments.push_back(s);
            }
            entries_.insert_or_assign(std::stoi(key), std::move(e));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("cache: missing or mistyped field: ") + e.what());
    }
}

TransitionOracle::TransitionOracle(const VehicleParams& vehicle, const WindVector& wind,
                                   double cell_size, TransitionCache& cache)
    : vehicle_(vehicle), wind_(wind), cell_size_(cell_size), cache_(&cache) {
    if (wind.magnitude() >= vehicle.v_min) {
        throw std::invalid_argument("oracle: wind magnitude must stay below v_min");
    }
}

bool TransitionOracle::computed(const Transition& t) const {
    return cache_->contains(canonicalize(t, wind_).class_id);
}

TransitionOracle::Result TransitionOracle::get(const Transition& t) {
    const CanonicalKey key = canonicalize(t, wind_);
    const auto [entry, computed_now] = cache_->get_or_compute(key.class_id, [&] {
        const Transition rep = transition_from_triple(key.class_id);
        auto r = true_cost(rep, vehicle_, wind_, cell_size_);
        return TransitionCache::Entry{r.cost, std::move(r.maneuver)};
    });
    Result res;
    res.cost = entry->cost;
    res.maneuver = key.mirrored ? mirrored(entry->maneuver) : entry->maneuver;
    res.computed_now = computed_now;
    return res;
}

std::optional<TransitionOracle::Result> TransitionOracle::peek(const Transition& t) const {
    const CanonicalKey key = canonicalize(t, wind_);
    const TransitionCache::Entry* entry = cache_->find(key.class_id);
    if (!entry) return std::nullopt;
    Result res;
    res.cost = entry->cost;
    res.maneuver = key.mirrored ? mirrored(entry->maneuver) : entry->maneuver;
    res.computed_now = false;
    return res;
}

int TransitionOracle::precompute_all(int workers) {
    std::vector<int> classes;
    classes.reserve(512);
    for (int id = 0; id < 512; ++id) {
        const CanonicalKey key = canonicalize(transition_from_triple(id), wind_);
        if (key.class_id == id) classes.push_back(id);
    }
    std::atomic<int> computed{0};
    const auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            if (get(transition_from_triple(classes[i])).computed_now) {
                computed.fetch_add(1, std::memory_order_relaxed);
            }
        }
    };
    workers = std::max(1, workers);
    if (workers == 1 || classes.size() < 8) {
        work(0, classes.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (classes.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(classes.size(), w * chunk);
            const std::size_t end = std::min(classes.size(), begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return computed.load();
}

std::pair<double, bool> cache_get_or_compute(TransitionCache& cache, const Transition& t,
                                             const VehicleParams& vehicle,
                                             const WindVector& wind, double cell_size) {
    TransitionOracle oracle(vehicle, wind, cell_size, cache);
    const auto res = oracle.get(t);
    return {res.cost, res.computed_now};
}

int precompute_all(TransitionCache& cache, const VehicleParams& vehicle, const WindVector& wind,
                   double cell_size, int workers) {
    TransitionOracle oracle(vehicle, wind, cell_size, cache);
    return oracle.precompute_all(workers);
}

}  // namespace tstar
