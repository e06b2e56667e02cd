#pragma once

#include <string_view>

#include "solarsim/control.hpp"

namespace solarsim {

enum class MissionState {
    Ascend,
    ReverseTop,
    TurnAtTop,
    LateralTop,
    TurnToDescend,
    Descend,
    ReverseBottom,
    BatteryCheck,
    TurnAtBottom,
    LateralBottom,
    TurnToAscend,
    TransitToDock,
    Docking,
    Charging,
    ResumeTransit,
    Idle,
};

std::string_view mission_state_name(MissionState s);

struct MissionConfig {
    double nozzle_width_m = 0.10;
    int cliff_debounce = 20;       // consecutive cliff readings to confirm
    int lateral_step_count = 10;   // safety cap on lateral iterations
    double lateral_tick_s = 0.5;   // duration of one lateral iteration
    double low_battery_v = 10.5;
    double reverse_duration_s = 0.5;
    double dock_tolerance_m = 0.05;
    double dt_s = 0.02; // engine tick, used for phase-tick bookkeeping
};

struct MissionMemory {
    int column_index = 0;
    long distance_from_dock = 0; // transit ticks accumulated toward the dock
    bool battery_was_low = false;
    int cliff_streak = 0;
    long phase_ticks = 0; // ticks spent in the current state
    bool resuming = false;
    bool transit_turning = false;
    bool resume_turning = false;
};

// Reduced per-tick observations fed to the state machine.
struct MissionInputs {
    bool cliff = false; // instantaneous detector output
    bool turn_done = false;
    bool battery_low = false;
    bool charge_complete = false;
    bool docked = false;
    bool on_panel = true;
    double lateral_moved_m = 0; // displacement since the lateral phase began
};

// Target of an in-place turn. negate_error selects the rotation sense of
// the control law; target_heading_rad is the commanded final heading.
struct TurnSpec {
    ErrorAxis axis = ErrorAxis::X;
    bool negate_error = false;
    double target_heading_rad = 0;
};

struct BehaviorDirective {
    enum class Motion {
        Stop,
        Ascend,
        Descend,
        LateralAway,
        LateralToward,
        Reverse,
        Turn,
    };
    Motion motion = Motion::Stop;
    bool vacuum_on = false;
    TurnSpec turn{};
};

struct MissionStepResult {
    MissionState state;
    MissionMemory memory;
    BehaviorDirective directive;
};

MissionStepResult mission_step(MissionState state, MissionMemory mem,
                               const MissionInputs& in, const MissionConfig& cfg);

// Streak bookkeeping for the cliff detector: increments on cliff, resets on
// a clear reading; confirmed once the streak exceeds cliff_debounce.
std::pair<bool, MissionMemory> debounce_cliff(MissionMemory mem, bool cliff,
                                              const MissionConfig& cfg);

// Lateral iterations remaining before the safety cap ends the phase.
int lateral_budget(const MissionMemory& mem, const MissionConfig& cfg);

} // namespace solarsim
