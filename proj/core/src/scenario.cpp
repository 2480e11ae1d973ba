#include "tstar/scenario.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tstar/lattice.hpp"
#include "tstar/rng.hpp"

namespace tstar {

using nlohmann::json;

std::string scenario_to_json(const Scenario& s) {
    json j;
    j["width"] = s.map.width;
    j["height"] = s.map.height;
    j["cell_size"] = s.map.cell_size;
    std::string blocked;
    blocked.reserve(s.map.blocked.size());
    for (auto b : s.map.blocked) blocked.push_back(b ? '1' : '0');
    j["blocked"] = blocked;
    j["start"] = {s.start.cx, s.start.cy, s.start.h};
    j["goal"] = {s.goal.cx, s.goal.cy, s.goal.h};
    j["v_min"] = s.vehicle.v_min;
    j["v_max"] = s.vehicle.v_max;
    j["K"] = s.vehicle.lat_accel;
    j["wind"] = {s.wind.wx, s.wind.wy};
    j["seed"] = s.seed;
    return j.dump(2) + "\n";
}

namespace {

Configuration parse_configuration(const json& j, const char* what, const GridMap& map) {
    if (!j.is_array() || j.size() != 3) {
        throw std::runtime_error(std::string("scenario: ") + what + " must be [cx, cy, h]");
    }
    Configuration c{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
    if (!map.in_bounds(c.cx, c.cy)) {
        throw std::runtime_error(std::string("scenario: ") + what + " out of bounds");
    }
    if (c.h < 0 || c.h >= kNumHeadings) {
        throw std::runtime_error(std::string("scenario: ") + what + " heading not in 0..7");
    }
    if (map.is_blocked(c.cx, c.cy)) {
        throw std::runtime_error(std::string("scenario: ") + what + " cell is blocked");
    }
    return c;
}

}  // namespace

Scenario scenario_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("scenario: invalid JSON: ") + e.what());
    }
    Scenario s;
    try {
        const int w = j.at("width").get<int>();
        const int h = j.at("height").get<int>();
        if (w < 1 || h < 1) throw std::runtime_error("scenario: non-positive dimensions");
        const double cs = j.value("cell_size", 1.0);
        if (!(cs > 0.0)) throw std::runtime_error("scenario: cell_size must be positive");
        s.map = GridMap(w, h, cs);
        const std::string blocked = j.at("blocked").get<std::string>();
        if (blocked.size() != static_cast<std::size_t>(w) * h) {
            throw std::runtime_error("scenario: blocked string length mismatch");
        }
        for (std::size_t i = 0; i < blocked.size(); ++i) {
            if (blocked[i] != '0' && blocked[i] != '1') {
                throw std::runtime_error("scenario: blocked string must be 0/1");
            }
            s.map.blocked[i] = blocked[i] == '1' ? 1 : 0;
        }
        s.start = parse_configuration(j.at("start"), "start", s.map);
        s.goal = parse_configuration(j.at("goal"), "goal", s.map);
        s.vehicle.v_min = j.at("v_min").get<double>();
        s.vehicle.v_max = j.at("v_max").get<double>();
        s.vehicle.lat_accel = j.at("K").get<double>();
        if (!(s.vehicle.v_min > 0.0) || s.vehicle.v_min > s.vehicle.v_max) {
            throw std::runtime_error("scenario: need 0 < v_min <= v_max");
        }
        if (!(s.vehicle.lat_accel > 0.0)) throw std::runtime_error("scenario: K must be positive");
        const auto& wind = j.at("wind");
        if (!wind.is_array() || wind.size() != 2) {
            throw std::runtime_error("scenario: wind must be [wx, wy]");
        }
        s.wind = {wind[0].get<double>(), wind[1].get<double>()};
        if (s.wind.magnitude() >= s.vehicle.v_min) {
            throw std::runtime_error("scenario: wind magnitude must stay below v_min");
        }
        s.seed = j.value("seed", std::uint64_t{0});
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("scenario: missing or mistyped field: ") + e.what());
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("scenario: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_json(buf.str());
}

void save_scenario(const Scenario& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("scenario: cannot write " + path);
    out << scenario_to_json(s);
}

Scenario generate_scenario(std::uint64_t seed, const GenerateOptions& opt) {
    if (opt.p_block < 0.0 || opt.p_block >= 1.0) {
        throw std::invalid_argument("generate_scenario: p_block must be in [0, 1)");
    }
    if (opt.wind.magnitude() >= opt.vehicle.v_min) {
        throw std::invalid_argument("generate_scenario: wind magnitude must stay below v_min");
    }
    Rng rng(seed);
    const LatticeEdges edges(opt.vehicle.rho_min(), opt.cell_size, opt.cell_size / 10.0);

    Scenario s;
    s.vehicle = opt.vehicle;
    s.wind = opt.wind;
    s.seed = seed;
    std::vector<int> free_cells;
    for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
        if (attempt % 25 == 0) {
            s.map = GridMap(opt.width, opt.height, opt.cell_size);
            for (auto& b : s.map.blocked) b = rng.next_double() < opt.p_block ? 1 : 0;
            free_cells.clear();
            for (int i = 0; i < opt.width * opt.height; ++i) {
                if (!s.map.blocked[i]) free_cells.push_back(i);
            }
        }
        if (free_cells.size() < 2) continue;
        const int sc = free_cells[rng.next_below(free_cells.size())];
        const int gc = free_cells[rng.next_below(free_cells.size())];
        s.start = {sc % opt.width, sc / opt.width, static_cast<int>(rng.next_below(8))};
        s.goal = {gc % opt.width, gc / opt.width, static_cast<int>(rng.next_below(8))};
        if (s.start == s.goal) continue;
        if (!dubins_grid_path(s.map, s.start, s.goal, edges).empty()) return s;
    }
    throw std::runtime_error("generate_scenario: no solvable instance within attempt budget");
}

}  // namespace tstar
