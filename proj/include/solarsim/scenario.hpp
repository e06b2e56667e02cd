#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solarsim/control.hpp"
#include "solarsim/dynamics.hpp"
#include "solarsim/mission.hpp"
#include "solarsim/power.hpp"
#include "solarsim/sensors.hpp"
#include "solarsim/world.hpp"

namespace solarsim {

struct StartPose {
    std::optional<double> x_m;
    std::optional<double> y_m;
    std::optional<double> heading_rad;
};

struct Scenario {
    ArrayLayout layout;
    KinematicParams kinematics;
    AccelConfig accel_cfg;
    PresetValues presets;
    bool auto_presets = true;       // derive presets from the scenario geometry
    bool calibrate_kinematics = true;
    PidGains gains;
    SpeedRefs refs;
    MissionConfig mission_cfg;
    BatteryModel battery;
    ChargerConfig charger;
    LoadLedger loads;
    double dt_s = 0.02;
    double max_sim_s = 600.0;
    std::uint64_t seed = 1;

    double cell_size_m = 0.02;
    double cleaning_efficiency = 0.8;
    double clean_threshold = 0.1;
    double footprint_forward_m = 0.12;
    double footprint_back_m = 0.12;      // brush spans the whole belly
    double footprint_half_width_m = 0.09; // brush is wider than the lateral step
    double sensor_forward_m = 0.10;
    double mount_height_in = 2.0;
    double max_range_in = 100.0;
    double turn_tolerance_rad = 0.05;
    double max_turn_s = 20.0; // hard cap on a single in-place turn

    std::vector<BumpLine> extra_bump_lines; // on top of panel junctions
    StartPose start;

    void validate() const; // throws std::invalid_argument
};

// Strict JSON loading: snake_case keys mirroring the fields above; unknown
// keys are rejected.
Scenario scenario_from_json_text(const std::string& text);
Scenario scenario_from_json_file(const std::string& path);

} // namespace solarsim
