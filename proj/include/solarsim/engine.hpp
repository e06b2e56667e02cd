#pragma once

#include <string>
#include <vector>

#include "solarsim/mission.hpp"
#include "solarsim/scenario.hpp"

namespace solarsim {

struct TraceRow {
    double t_s = 0;
    MissionState state = MissionState::Ascend;
    double ultra_in = 0;
    int duty_left = 0;
    int duty_right = 0;
    int accel_x = 0;
    int accel_y = 0;
    double battery_v = 0;
    double x_m = 0;
    double y_m = 0;
    double heading_rad = 0;
    bool vacuum_on = false;
};

struct Event {
    double t_s = 0;
    MissionState from = MissionState::Ascend;
    MissionState to = MissionState::Ascend;
};

struct RunSummary {
    double coverage_fraction = 0;
    int columns_completed = 0;
    int dock_events = 0;
    int resume_column = -1;
    double mean_ascend_speed_mps = 0;
    double mean_descend_speed_mps = 0;
    double sim_wall_ratio = 0;
};

struct RunResult {
    std::vector<TraceRow> trace;
    std::vector<Event> events;
    RunSummary summary;
    MissionMemory final_memory;
    int interruption_column = -1;      // column when a low battery sent us home
    long resume_distance_ticks = -1;   // distance_from_dock left when resume ended
    std::vector<double> bump_times_s;  // ticks on which a bump line was crossed
    CoverageGrid grid;
};

RunResult run(const Scenario& scenario);

std::string trace_csv(const std::vector<TraceRow>& trace);
std::string summary_text(const RunSummary& summary);
std::string events_text(const std::vector<Event>& events);

} // namespace solarsim
