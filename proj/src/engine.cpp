#include "solarsim/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace solarsim {

namespace {

using Motion = BehaviorDirective::Motion;

struct TurnTracker {
    TurnProgress progress;
    double start_t = 0;
    bool active = false;
};

double rect_distance(const Region& r, double x, double y) {
    const double dx = std::max({r.x0 - x, 0.0, x - r.x1});
    const double dy = std::max({r.y0 - y, 0.0, y - r.y1});
    return std::hypot(dx, dy);
}

HeadingMode heading_mode_of(Motion m) {
    switch (m) {
    case Motion::Ascend: return HeadingMode::Ascend;
    case Motion::Descend: return HeadingMode::Descend;
    case Motion::LateralAway: return HeadingMode::LateralAway;
    case Motion::LateralToward: return HeadingMode::LateralToward;
    default: throw std::logic_error("not a heading motion");
    }
}

bool same_turn(const TurnSpec& a, const TurnSpec& b) {
    return a.axis == b.axis && a.negate_error == b.negate_error &&
           a.target_heading_rad == b.target_heading_rad;
}

} // namespace

RunResult run(const Scenario& scenario) {
    Scenario sc = scenario;
    sc.validate();
    sc.mission_cfg.dt_s = sc.dt_s;
    const auto wall0 = std::chrono::steady_clock::now();

    const Workspace ws = build_workspace(sc.layout);
    CoverageGrid grid = make_coverage_grid(ws, sc.cell_size_m);

    KinematicParams kin = sc.kinematics;
    if (sc.calibrate_kinematics) {
        double max_incline = 0;
        for (const PanelSpec& p : sc.layout.panels)
            max_incline = std::max(max_incline, p.incline_deg);
        SpeedBandTargets targets;
        targets.incline_deg = max_incline;
        targets.duty_up = sc.refs.ref_up;
        targets.duty_down = sc.refs.ref_down;
        kin = calibrate_speed_band(kin, targets);
    }
    const int zero_g = expected_axis_value(0.0, sc.accel_cfg);

    std::vector<BumpLine> bumps = ws.bump_lines;
    bumps.insert(bumps.end(), sc.extra_bump_lines.begin(),
                 sc.extra_bump_lines.end());

    const Region* first_panel = nullptr;
    for (const Region& r : ws.regions)
        if (r.kind == RegionKind::Panel) {
            first_panel = &r;
            break;
        }
    const Region& dock_region = ws.regions.front();

    RobotState robot;
    robot.x_m = sc.start.x_m.value_or(first_panel->x0 +
                                      sc.mission_cfg.nozzle_width_m / 2.0);
    robot.y_m = sc.start.y_m.value_or(0.05);
    robot.heading_rad = normalize_angle(sc.start.heading_rad.value_or(M_PI / 2));

    RandomStream root(sc.seed);
    RandomStream accel_rng_a = root.split(1);
    RandomStream accel_rng_b = root.split(2);

    MissionState state = MissionState::Ascend;
    MissionMemory mem;
    PidState pid;
    TurnTracker turn;
    ChargerState charger;
    BatteryModel battery = sc.battery;
    BehaviorDirective prev_directive;
    prev_directive.motion = Motion::Ascend;

    double lateral_start_x = robot.x_m;
    double lateral_start_y = robot.y_m;

    RunResult out;
    double ascend_speed_sum = 0, descend_speed_sum = 0;
    long ascend_ticks = 0, descend_ticks = 0;

    const long max_ticks = std::lround(sc.max_sim_s / sc.dt_s);
    out.trace.reserve(static_cast<std::size_t>(std::min<long>(max_ticks, 1 << 22)));
    std::vector<RawAccelCounts> samples;
    samples.reserve(2 * static_cast<std::size_t>(sc.accel_cfg.n_samples));

    for (long tick = 0; tick < max_ticks; ++tick) {
        const double t = tick * sc.dt_s;

        const auto region = region_at(ws, robot.x_m, robot.y_m);
        const double incline = region ? region->incline_deg : 0.0;
        const bool on_panel = region && region->kind == RegionKind::Panel;

        // Sensors observe the pre-step state.
        const double look_x =
            robot.x_m + sc.sensor_forward_m * std::cos(robot.heading_rad);
        const double look_y =
            robot.y_m + sc.sensor_forward_m * std::sin(robot.heading_rad);
        const double echo =
            simulate_echo_us(ws, look_x, look_y, sc.mount_height_in, sc.max_range_in);
        const double dist_in = ultra_distance(echo);
        const bool cliff = detect_cliff(dist_in);

        const double alpha = robot.heading_rad - M_PI / 2.0;
        const BodyAccel body = gravity_body_accel(incline, alpha);
        samples.clear();
        for (int i = 0; i < sc.accel_cfg.n_samples; ++i) {
            samples.push_back(sample_accel_counts(body, sc.accel_cfg, accel_rng_a));
            samples.push_back(sample_accel_counts(body, sc.accel_cfg, accel_rng_b));
        }
        const AccelFrame frame = accel_reduce(samples, sc.accel_cfg);

        // Turn completion. The flip counter terminates a turn only near the
        // target; on regions whose incline is below the sensor quantization
        // there is no signal and completion is purely geometric.
        bool turn_done = false;
        if (prev_directive.motion == Motion::Turn && turn.active) {
            const double heading_err = std::abs(normalize_angle(
                robot.heading_rad - prev_directive.turn.target_heading_rad));
            const bool geo = heading_err < sc.turn_tolerance_rad;
            const bool flips =
                turn.progress.flip_count >= turn.progress.flip_target;
            const bool has_signal =
                100.0 * std::sin(incline * M_PI / 180.0) >= 2.0;
            if (t - turn.start_t >= sc.max_turn_s) {
                turn_done = true;
            } else if (has_signal) {
                if (flips && geo)
                    turn_done = true;
                else if (flips)
                    turn.progress = TurnProgress{}; // spurious, keep turning
            } else {
                turn_done = geo;
            }
        }

        MissionInputs in;
        in.cliff = cliff;
        in.turn_done = turn_done;
        in.battery_low = battery.terminal_v() < sc.mission_cfg.low_battery_v;
        in.charge_complete = charger.phase == ChargePhase::Done;
        in.docked =
            rect_distance(dock_region, robot.x_m, robot.y_m) <= sc.mission_cfg.dock_tolerance_m;
        in.on_panel = on_panel;
        in.lateral_moved_m =
            std::hypot(robot.x_m - lateral_start_x, robot.y_m - lateral_start_y);

        const MissionState prev_state = state;
        const MissionStepResult res = mission_step(state, mem, in, sc.mission_cfg);
        state = res.state;
        mem = res.memory;
        if (state != prev_state) {
            out.events.push_back(Event{t, prev_state, state});
            if (state == MissionState::LateralTop ||
                state == MissionState::LateralBottom) {
                lateral_start_x = robot.x_m;
                lateral_start_y = robot.y_m;
            }
            if (state == MissionState::Charging)
                charger = ChargerState{};
            if (state == MissionState::TransitToDock && mem.battery_was_low)
                out.interruption_column = mem.column_index;
            if (prev_state == MissionState::ResumeTransit) {
                out.summary.resume_column = mem.column_index;
                out.resume_distance_ticks = mem.distance_from_dock;
            }
        }

        const bool behavior_changed =
            state != prev_state ||
            res.directive.motion != prev_directive.motion ||
            (res.directive.motion == Motion::Turn &&
             !same_turn(res.directive.turn, prev_directive.turn));
        if (behavior_changed) {
            pid = PidState{};
            turn = TurnTracker{};
            if (res.directive.motion == Motion::Turn) {
                turn.active = true;
                turn.start_t = t;
            }
        }

        MotorCommand cmd;
        switch (res.directive.motion) {
        case Motion::Stop:
            cmd = stop_command();
            break;
        case Motion::Reverse:
            cmd.duty_left = -sc.refs.ref_reverse;
            cmd.duty_right = -sc.refs.ref_reverse;
            break;
        case Motion::Ascend:
        case Motion::Descend:
        case Motion::LateralAway:
        case Motion::LateralToward: {
            const HeadingMode mode = heading_mode_of(res.directive.motion);
            const HeadingLaw law =
                sc.auto_presets ? auto_heading_law(mode, sc.refs, zero_g)
                                : paper_heading_law(mode, sc.presets, sc.refs);
            auto [c, p] = heading_command(frame, law, pid, sc.gains);
            cmd = c;
            pid = p;
            break;
        }
        case Motion::Turn: {
            const TurnSpec& spec = res.directive.turn;
            const int preset =
                sc.auto_presets ? zero_g
                                : (spec.axis == ErrorAxis::X ? sc.presets.x1_set_turn
                                                             : sc.presets.y1_set_turn);
            const TurnResult tr =
                turn_command(frame, preset, spec.axis, spec.negate_error, pid,
                             sc.gains, turn.progress, sc.refs);
            cmd = tr.cmd;
            pid = tr.pid;
            turn.progress = tr.progress;
            break;
        }
        }

        RobotState next = robot;
        if (res.directive.motion == Motion::Stop) {
            next.speed_mps = 0; // active brake
        } else {
            next = step(robot, cmd, incline, BumpContact::None, sc.dt_s, kin);
            BumpContact contact = BumpContact::None;
            for (const BumpLine& line : bumps) {
                const double pre = (line.axis == BumpAxis::X) ? robot.x_m : robot.y_m;
                const double post = (line.axis == BumpAxis::X) ? next.x_m : next.y_m;
                if ((pre - line.coord_m) * (post - line.coord_m) >= 0)
                    continue;
                // Leading wheel: the one further ahead along the crossing axis.
                const double lx = robot.x_m - std::sin(robot.heading_rad) *
                                                  kin.track_width_m / 2.0;
                const double ly = robot.y_m + std::cos(robot.heading_rad) *
                                                  kin.track_width_m / 2.0;
                const double rx = robot.x_m + std::sin(robot.heading_rad) *
                                                  kin.track_width_m / 2.0;
                const double ry = robot.y_m - std::cos(robot.heading_rad) *
                                                  kin.track_width_m / 2.0;
                const double dir = (post > pre) ? 1.0 : -1.0;
                const double left_ahead = (line.axis == BumpAxis::X ? lx : ly) * dir;
                const double right_ahead = (line.axis == BumpAxis::X ? rx : ry) * dir;
                contact = (left_ahead >= right_ahead) ? BumpContact::LeftFirst
                                                      : BumpContact::RightFirst;
                break;
            }
            if (contact != BumpContact::None) {
                next = step(robot, cmd, incline, contact, sc.dt_s, kin);
                out.bump_times_s.push_back(t);
            }
        }

        if (res.directive.vacuum_on) {
            Footprint fp;
            fp.cx = next.x_m;
            fp.cy = next.y_m;
            fp.heading_rad = next.heading_rad;
            fp.forward_m = sc.footprint_forward_m;
            fp.back_m = sc.footprint_back_m;
            fp.half_width_m = sc.footprint_half_width_m;
            apply_cleaning(grid, fp, sc.cleaning_efficiency);
        }

        if (state == MissionState::Charging) {
            const ChargeStepResult cr = charge_step(battery, sc.charger, charger, sc.dt_s);
            battery = cr.battery;
            charger = cr.charger;
        } else {
            double loads = sc.loads.idle_w;
            if (res.directive.vacuum_on)
                loads += sc.loads.vacuum_w + sc.loads.brush_w;
            loads += sc.loads.drive_w_per_duty *
                     (std::abs(cmd.duty_left) + std::abs(cmd.duty_right)) / 1000.0;
            battery = discharge_step(battery, loads, sc.dt_s);
        }

        TraceRow row;
        row.t_s = t;
        row.state = state;
        row.ultra_in = dist_in;
        row.duty_left = cmd.duty_left;
        row.duty_right = cmd.duty_right;
        row.accel_x = frame.x1;
        row.accel_y = frame.y1;
        row.battery_v = battery.terminal_v();
        row.x_m = robot.x_m;
        row.y_m = robot.y_m;
        row.heading_rad = robot.heading_rad;
        row.vacuum_on = res.directive.vacuum_on;
        out.trace.push_back(row);

        if (state == MissionState::Ascend && res.directive.motion == Motion::Ascend) {
            ascend_speed_sum += std::abs(next.speed_mps);
            ++ascend_ticks;
        } else if (state == MissionState::Descend &&
                   res.directive.motion == Motion::Descend) {
            descend_speed_sum += std::abs(next.speed_mps);
            ++descend_ticks;
        }

        robot = next;
        prev_directive = res.directive;

        if (state == MissionState::Idle)
            break;
    }

    RunSummary& s = out.summary;
    s.coverage_fraction = coverage_fraction(grid, sc.clean_threshold);
    for (const Event& e : out.events) {
        if (e.to == MissionState::ReverseTop || e.to == MissionState::ReverseBottom)
            ++s.columns_completed;
        if (e.to == MissionState::Docking)
            ++s.dock_events;
    }
    s.mean_ascend_speed_mps =
        ascend_ticks > 0 ? ascend_speed_sum / ascend_ticks : 0.0;
    s.mean_descend_speed_mps =
        descend_ticks > 0 ? descend_speed_sum / descend_ticks : 0.0;
    const double wall_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0)
            .count();
    const double sim_s = out.trace.empty() ? 0.0 : out.trace.back().t_s + sc.dt_s;
    s.sim_wall_ratio = wall_s > 0 ? sim_s / wall_s : 0.0;

    out.final_memory = mem;
    out.grid = std::move(grid);
    return out;
}

namespace {
std::string format_g6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}
} // namespace

std::string trace_csv(const std::vector<TraceRow>& trace) {
    std::string out =
        "t_s,state,ultra_in,duty_left,duty_right,accel_x,accel_y,battery_v,"
        "x_m,y_m,heading_rad,vacuum_on\n";
    for (const TraceRow& r : trace) {
        out += format_g6(r.t_s);
        out += ',';
        out += mission_state_name(r.state);
        out += ',';
        out += format_g6(r.ultra_in);
        out += ',';
        out += std::to_string(r.duty_left);
        out += ',';
        out += std::to_string(r.duty_right);
        out += ',';
        out += std::to_string(r.accel_x);
        out += ',';
        out += std::to_string(r.accel_y);
        out += ',';
        out += format_g6(r.battery_v);
        out += ',';
        out += format_g6(r.x_m);
        out += ',';
        out += format_g6(r.y_m);
        out += ',';
        out += format_g6(r.heading_rad);
        out += ',';
        out += r.vacuum_on ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string summary_text(const RunSummary& s) {
    std::string out;
    out += "coverage_fraction " + format_g6(s.coverage_fraction) + "\n";
    out += "columns_completed " + std::to_string(s.columns_completed) + "\n";
    out += "dock_events " + std::to_string(s.dock_events) + "\n";
    out += "resume_column " + std::to_string(s.resume_column) + "\n";
    out += "mean_ascend_speed_mps " + format_g6(s.mean_ascend_speed_mps) + "\n";
    out += "mean_descend_speed_mps " + format_g6(s.mean_descend_speed_mps) + "\n";
    out += "sim_wall_ratio " + format_g6(s.sim_wall_ratio) + "\n";
    return out;
}

std::string events_text(const std::vector<Event>& events) {
    std::string out;
    for (const Event& e : events) {
        out += format_g6(e.t_s);
        out += ' ';
        out += mission_state_name(e.from);
        out += " -> ";
        out += mission_state_name(e.to);
        out += '\n';
    }
    return out;
}

} // namespace solarsim
