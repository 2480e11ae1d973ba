#pragma once

#include <cstdint>
#include <string>

#include "tstar/grid.hpp"

namespace tstar {

/// Serialize a scenario as JSON (stable key order, round-trippable doubles).
std::string scenario_to_json(const Scenario& s);

/// Parse and validate a scenario document. Throws std::runtime_error on
/// malformed input or violated invariants (blocked start/goal, wind too
/// strong, bad headings).
Scenario scenario_from_json(const std::string& text);

Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& s, const std::string& path);

struct GenerateOptions {
    int width = 14;
    int height = 14;
    double p_block = 0.25;
    double cell_size = 1.0;
    VehicleParams vehicle;
    WindVector wind;
    int max_attempts = 1000;
};

/// Deterministic random scenario: blocked cells drawn per-cell with
/// probability p_block, start/goal drawn uniformly over free cells and
/// headings, resampled (map included, every 25 attempts) until a minimum-
/// speed Dubins grid path exists. Such a path is itself a valid plan, so a
/// scenario that passes this check is solvable for the full planner.
/// Throws std::runtime_error when the attempt budget runs out.
Scenario generate_scenario(std::uint64_t seed, const GenerateOptions& opt = {});

}  // namespace tstar
