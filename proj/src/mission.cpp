#include "solarsim/mission.hpp"

#include <cmath>
#include <stdexcept>

namespace solarsim {

std::string_view mission_state_name(MissionState s) {
    switch (s) {
    case MissionState::Ascend: return "Ascend";
    case MissionState::ReverseTop: return "ReverseTop";
    case MissionState::TurnAtTop: return "TurnAtTop";
    case MissionState::LateralTop: return "LateralTop";
    case MissionState::TurnToDescend: return "TurnToDescend";
    case MissionState::Descend: return "Descend";
    case MissionState::ReverseBottom: return "ReverseBottom";
    case MissionState::BatteryCheck: return "BatteryCheck";
    case MissionState::TurnAtBottom: return "TurnAtBottom";
    case MissionState::LateralBottom: return "LateralBottom";
    case MissionState::TurnToAscend: return "TurnToAscend";
    case MissionState::TransitToDock: return "TransitToDock";
    case MissionState::Docking: return "Docking";
    case MissionState::Charging: return "Charging";
    case MissionState::ResumeTransit: return "ResumeTransit";
    case MissionState::Idle: return "Idle";
    }
    throw std::invalid_argument("unknown mission state");
}

std::pair<bool, MissionMemory> debounce_cliff(MissionMemory mem, bool cliff,
                                              const MissionConfig& cfg) {
    if (!cliff) {
        mem.cliff_streak = 0;
        return {false, mem};
    }
    mem.cliff_streak += 1;
    if (mem.cliff_streak > cfg.cliff_debounce) {
        mem.cliff_streak = 0;
        return {true, mem};
    }
    return {false, mem};
}

int lateral_budget(const MissionMemory& mem, const MissionConfig& cfg) {
    const long per_iter =
        std::max<long>(1, std::lround(cfg.lateral_tick_s / cfg.dt_s));
    const long used = mem.phase_ticks / per_iter;
    return std::max(0, cfg.lateral_step_count - static_cast<int>(used));
}

namespace {

constexpr double kPi = 3.14159265358979323846;

// Turn specifications per transition. Headings: ascend pi/2, lateral away
// from the dock 0, toward the dock pi, descend -pi/2.
const TurnSpec kTurnAtTop{ErrorAxis::X, false, 0.0};
const TurnSpec kTurnToDescend{ErrorAxis::Y, true, -kPi / 2};
const TurnSpec kTurnAtBottom{ErrorAxis::X, false, 0.0};
const TurnSpec kTurnToAscend{ErrorAxis::Y, false, kPi / 2};
const TurnSpec kTurnToDockTransit{ErrorAxis::X, true, kPi};
const TurnSpec kTurnOutOfDock{ErrorAxis::X, false, 0.0};

BehaviorDirective directive_for(MissionState s, const MissionMemory& mem,
                                bool on_panel) {
    using Motion = BehaviorDirective::Motion;
    BehaviorDirective d;
    switch (s) {
    case MissionState::Ascend:
        d.motion = Motion::Ascend;
        d.vacuum_on = on_panel;
        break;
    case MissionState::Descend:
        d.motion = Motion::Descend;
        d.vacuum_on = on_panel;
        break;
    case MissionState::LateralTop:
    case MissionState::LateralBottom:
        d.motion = Motion::LateralAway;
        d.vacuum_on = on_panel;
        break;
    case MissionState::ReverseTop:
    case MissionState::ReverseBottom:
        d.motion = Motion::Reverse;
        break;
    case MissionState::TurnAtTop:
        d.motion = Motion::Turn;
        d.turn = kTurnAtTop;
        break;
    case MissionState::TurnToDescend:
        d.motion = Motion::Turn;
        d.turn = kTurnToDescend;
        break;
    case MissionState::TurnAtBottom:
        d.motion = Motion::Turn;
        d.turn = kTurnAtBottom;
        break;
    case MissionState::TurnToAscend:
        d.motion = Motion::Turn;
        d.turn = kTurnToAscend;
        break;
    case MissionState::TransitToDock:
        if (mem.transit_turning) {
            d.motion = Motion::Turn;
            d.turn = kTurnToDockTransit;
        } else {
            d.motion = Motion::LateralToward;
        }
        break;
    case MissionState::ResumeTransit:
        if (mem.resume_turning) {
            d.motion = Motion::Turn;
            d.turn = kTurnOutOfDock;
        } else {
            d.motion = Motion::LateralAway;
        }
        break;
    case MissionState::BatteryCheck:
    case MissionState::Docking:
    case MissionState::Charging:
    case MissionState::Idle:
        d.motion = Motion::Stop;
        break;
    }
    return d;
}

} // namespace

MissionStepResult mission_step(MissionState state, MissionMemory mem,
                               const MissionInputs& in, const MissionConfig& cfg) {
    const long reverse_ticks =
        std::max<long>(1, std::lround(cfg.reverse_duration_s / cfg.dt_s));
    const long lateral_cap_ticks =
        static_cast<long>(cfg.lateral_step_count) *
        std::max<long>(1, std::lround(cfg.lateral_tick_s / cfg.dt_s));

    MissionState next = state;
    bool stayed = true;
    auto enter = [&](MissionState s) {
        next = s;
        mem.phase_ticks = 0;
        mem.cliff_streak = 0;
        stayed = false;
    };

    switch (state) {
    case MissionState::Ascend: {
        auto [confirmed, m2] = debounce_cliff(mem, in.cliff, cfg);
        mem = m2;
        if (confirmed) {
            mem.column_index += 1; // ascend strip finished
            mem.resuming = false;
            enter(MissionState::ReverseTop);
        }
        break;
    }
    case MissionState::ReverseTop:
        if (mem.phase_ticks + 1 >= reverse_ticks)
            enter(MissionState::TurnAtTop);
        break;
    case MissionState::TurnAtTop:
        if (in.turn_done)
            enter(MissionState::LateralTop);
        break;
    case MissionState::LateralTop: {
        auto [confirmed, m2] = debounce_cliff(mem, in.cliff, cfg);
        mem = m2;
        if (in.on_panel &&
            (confirmed || in.lateral_moved_m >= cfg.nozzle_width_m ||
             mem.phase_ticks + 1 >= lateral_cap_ticks))
            enter(MissionState::TurnToDescend);
        break;
    }
    case MissionState::TurnToDescend:
        if (in.turn_done)
            enter(MissionState::Descend);
        break;
    case MissionState::Descend: {
        auto [confirmed, m2] = debounce_cliff(mem, in.cliff, cfg);
        mem = m2;
        if (confirmed) {
            mem.column_index += 1; // descend strip finished
            enter(MissionState::ReverseBottom);
        }
        break;
    }
    case MissionState::ReverseBottom:
        if (mem.phase_ticks + 1 >= reverse_ticks)
            enter(MissionState::BatteryCheck);
        break;
    case MissionState::BatteryCheck:
        if (in.battery_low) {
            mem.battery_was_low = true;
            mem.transit_turning = true;
            enter(MissionState::TransitToDock);
        } else {
            enter(MissionState::TurnAtBottom);
        }
        break;
    case MissionState::TurnAtBottom:
        if (in.turn_done)
            enter(MissionState::LateralBottom);
        break;
    case MissionState::LateralBottom: {
        auto [confirmed, m2] = debounce_cliff(mem, in.cliff, cfg);
        mem = m2;
        if (confirmed) {
            // End of the array: the cleaning pass is complete.
            mem.transit_turning = true;
            enter(MissionState::TransitToDock);
        } else if (in.on_panel &&
                   (in.lateral_moved_m >= cfg.nozzle_width_m ||
                    mem.phase_ticks + 1 >= lateral_cap_ticks)) {
            enter(MissionState::TurnToAscend);
        }
        break;
    }
    case MissionState::TurnToAscend:
        if (in.turn_done)
            enter(MissionState::Ascend);
        break;
    case MissionState::TransitToDock:
        if (mem.transit_turning) {
            if (in.turn_done) {
                mem.transit_turning = false;
                mem.phase_ticks = 0;
            }
        } else {
            mem.distance_from_dock += 1;
            if (in.docked)
                enter(MissionState::Docking);
        }
        break;
    case MissionState::Docking:
        // A low-battery return recharges and resumes; the end-of-array
        // return parks the robot.
        if (mem.battery_was_low)
            enter(MissionState::Charging);
        else
            enter(MissionState::Idle);
        break;
    case MissionState::Charging:
        if (in.charge_complete) {
            if (mem.battery_was_low) {
                mem.battery_was_low = false;
                mem.resuming = true;
                mem.resume_turning = true;
                enter(MissionState::ResumeTransit);
            } else {
                enter(MissionState::Idle);
            }
        }
        break;
    case MissionState::ResumeTransit:
        if (mem.resume_turning) {
            if (in.turn_done) {
                mem.resume_turning = false;
                mem.phase_ticks = 0;
            }
        } else {
            if (mem.distance_from_dock > 0)
                mem.distance_from_dock -= 1;
            if (mem.distance_from_dock == 0)
                enter(MissionState::TurnToAscend);
        }
        break;
    case MissionState::Idle:
        break;
    default:
        throw std::invalid_argument("unknown mission state");
    }

    if (stayed)
        mem.phase_ticks += 1;

    MissionStepResult out;
    out.state = next;
    out.memory = mem;
    out.directive = directive_for(next, mem, in.on_panel);
    return out;
}

} // namespace solarsim
