#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "tstar/maneuver.hpp"
#include "tstar/transition.hpp"

namespace tstar {

struct TransitionCostResult {
    double cost = 0.0;  // seconds
    Maneuver maneuver;  // realization anchored at the transition's from-pose
};

Pose transition_start_pose(const Transition& t, double cell_size);
Pose transition_goal_pose(const Transition& t, double cell_size);

/// The expensive true-cost function c(.): minimum-time maneuver realizing a
/// grid transition, searched over a family of arc/straight candidates with
/// speeds tied to radii by v = sqrt(K * r). Under wind, candidates are built
/// in the air frame against a drift-corrected virtual goal and matched by a
/// fixed-point iteration on the total time (tolerance 1e-10, capped at 200
/// rounds). Deterministic: fixed starts and budgets, no randomness.
/// Requires |wind| < v_min. Throws if no candidate family member closes the
/// boundary conditions (cannot happen for valid inputs).
TransitionCostResult true_cost(const Transition& t, const VehicleParams& vehicle,
                               const WindVector& wind, double cell_size);

/// Keeps evaluated transition classes. kappa(T) = 1 while a class is absent,
/// 0 once present. Entries are immutable after publication; concurrent
/// readers race-free, duplicated computation is tolerated and counted once.
class TransitionCache {
  public:
    struct Entry {
        double cost = 0.0;
        Maneuver maneuver;  // canonical-frame realization of the representative
    };

    bool contains(int class_id) const;
    const Entry* find(int class_id) const;

    /// Returns the entry plus whether this call performed the computation.
    std::pair<const Entry*, bool> get_or_compute(int class_id,
                                                 const std::function<Entry()>& compute);

    std::size_t size() const;
    long compute_count() const;

    /// Serialized cache: session parameters plus one record per class.
    std::string dump_json(const VehicleParams& vehicle, const WindVector& wind,
                          double cell_size) const;
    /// Loads a dump, validating that it was produced for the same session
    /// parameters. Loaded entries count as already computed (kappa = 0)
    /// without contributing to compute_count.
    void load_json(const std::string& text, const VehicleParams& vehicle,
                   const WindVector& wind, double cell_size);

  private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<int, Entry> entries_;
    std::atomic<long> computed_{0};
};

/// Session view over a cache: fixed vehicle/wind/cell parameters. A session
/// with different parameters must use a fresh cache.
class TransitionOracle {
  public:
    TransitionOracle(const VehicleParams& vehicle, const WindVector& wind, double cell_size,
                     TransitionCache& cache);

    const VehicleParams& vehicle() const { return vehicle_; }
    const WindVector& wind() const { return wind_; }
    double cell_size() const { return cell_size_; }

    /// kappa(T) == 0, i.e. the class of t has been evaluated.
    bool computed(const Transition& t) const;

    struct Result {
        double cost = 0.0;
        Maneuver maneuver;  // realized for the queried transition
        bool computed_now = false;
    };

    /// Cached cost of the transition's class, computing it on a miss.
    Result get(const Transition& t);

    /// Cached view without triggering a computation.
    std::optional<Result> peek(const Transition& t) const;

    /// Evaluates every canonical class (68 static, 512 under wind) and
    /// returns the number of classes computed by this call.
    int precompute_all(int workers = 1);

  private:
    VehicleParams vehicle_;
    WindVector wind_;
    double cell_size_;
    TransitionCache* cache_;
};

/// Free-function form: first call per class computes and inserts, later
/// calls hit the cache. Returns (cost, was_computed_now).
std::pair<double, bool> cache_get_or_compute(TransitionCache& cache, const Transition& t,
                                             const VehicleParams& vehicle,
                                             const WindVector& wind, double cell_size);

int precompute_all(TransitionCache& cache, const VehicleParams& vehicle, const WindVector& wind,
                   double cell_size, int workers = 1);

}  // namespace tstar
