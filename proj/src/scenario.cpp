#include "solarsim/scenario.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace solarsim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("scenario: " + msg);
}

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
    if (!obj.is_object())
        fail(where + " must be a JSON object");
    for (const auto& item : obj.items()) {
        if (!allowed.contains(item.key()))
            fail("unknown key '" + item.key() + "' in " + where);
    }
}

template <typename T>
void get(const json& obj, const char* key, T& out) {
    if (obj.contains(key))
        out = obj.at(key).get<T>();
}

PanelSpec parse_panel(const json& j) {
    check_keys(j, "panel", {"length_m", "width_m", "incline_deg"});
    PanelSpec p;
    get(j, "length_m", p.length_m);
    get(j, "width_m", p.width_m);
    get(j, "incline_deg", p.incline_deg);
    return p;
}

ArrayLayout parse_layout(const json& j) {
    check_keys(j, "layout", {"panels", "rail_length_m", "dock_offset_m"});
    ArrayLayout l;
    if (j.contains("panels")) {
        l.panels.clear();
        for (const json& p : j.at("panels"))
            l.panels.push_back(parse_panel(p));
    }
    get(j, "rail_length_m", l.rail_length_m);
    get(j, "dock_offset_m", l.dock_offset_m);
    return l;
}

KinematicParams parse_kinematics(const json& j) {
    check_keys(j, "kinematics",
               {"track_width_m", "wheel_diameter_m", "free_speed_mps",
                "gravity_gain_mps", "bump_slow_factor", "bump_heading_kick_rad"});
    KinematicParams k;
    get(j, "track_width_m", k.track_width_m);
    get(j, "wheel_diameter_m", k.wheel_diameter_m);
    get(j, "free_speed_mps", k.free_speed_mps);
    get(j, "gravity_gain_mps", k.gravity_gain_mps);
    get(j, "bump_slow_factor", k.bump_slow_factor);
    get(j, "bump_heading_kick_rad", k.bump_heading_kick_rad);
    return k;
}

AccelConfig parse_accel(const json& j) {
    check_keys(j, "accel_cfg",
               {"sensitivity_v_per_g", "zero_g_offset_v", "vref_v",
                "adc_full_scale", "noise_sd_counts", "n_samples"});
    AccelConfig c;
    get(j, "sensitivity_v_per_g", c.sensitivity_v_per_g);
    get(j, "zero_g_offset_v", c.zero_g_offset_v);
    get(j, "vref_v", c.vref_v);
    get(j, "adc_full_scale", c.adc_full_scale);
    get(j, "noise_sd_counts", c.noise_sd_counts);
    get(j, "n_samples", c.n_samples);
    return c;
}

PresetValues parse_presets(const json& j) {
    check_keys(j, "presets",
               {"x1_set_up", "x1_set_down", "x1_set_turn", "y1_set_turn"});
    PresetValues p;
    get(j, "x1_set_up", p.x1_set_up);
    get(j, "x1_set_down", p.x1_set_down);
    get(j, "x1_set_turn", p.x1_set_turn);
    get(j, "y1_set_turn", p.y1_set_turn);
    return p;
}

PidGains parse_gains(const json& j) {
    check_keys(j, "gains", {"kp", "ki", "kd"});
    PidGains g;
    get(j, "kp", g.kp);
    get(j, "ki", g.ki);
    get(j, "kd", g.kd);
    return g;
}

SpeedRefs parse_refs(const json& j) {
    check_keys(j, "refs",
               {"ref_up", "ref_down", "ref_turn", "ref_lateral", "ref_reverse"});
    SpeedRefs r;
    get(j, "ref_up", r.ref_up);
    get(j, "ref_down", r.ref_down);
    get(j, "ref_turn", r.ref_turn);
    get(j, "ref_lateral", r.ref_lateral);
    get(j, "ref_reverse", r.ref_reverse);
    return r;
}

MissionConfig parse_mission(const json& j) {
    check_keys(j, "mission_cfg",
               {"nozzle_width_m", "cliff_debounce", "lateral_step_count",
                "lateral_tick_s", "low_battery_v", "reverse_duration_s",
                "dock_tolerance_m"});
    MissionConfig m;
    get(j, "nozzle_width_m", m.nozzle_width_m);
    get(j, "cliff_debounce", m.cliff_debounce);
    get(j, "lateral_step_count", m.lateral_step_count);
    get(j, "lateral_tick_s", m.lateral_tick_s);
    get(j, "low_battery_v", m.low_battery_v);
    get(j, "reverse_duration_s", m.reverse_duration_s);
    get(j, "dock_tolerance_m", m.dock_tolerance_m);
    return m;
}

BatteryModel parse_battery(const json& j) {
    check_keys(j, "battery", {"capacity_ah", "soc", "v_full", "v_empty"});
    BatteryModel b;
    get(j, "capacity_ah", b.capacity_ah);
    get(j, "soc", b.soc);
    get(j, "v_full", b.v_full);
    get(j, "v_empty", b.v_empty);
    return b;
}

ChargerConfig parse_charger(const json& j) {
    check_keys(j, "charger", {"i_cc", "v_cv", "i_term", "cv_tau_s"});
    ChargerConfig c;
    get(j, "i_cc", c.i_cc);
    get(j, "v_cv", c.v_cv);
    get(j, "i_term", c.i_term);
    get(j, "cv_tau_s", c.cv_tau_s);
    return c;
}

LoadLedger parse_loads(const json& j) {
    check_keys(j, "loads", {"drive_w_per_duty", "brush_w", "vacuum_w", "idle_w"});
    LoadLedger l;
    get(j, "drive_w_per_duty", l.drive_w_per_duty);
    get(j, "brush_w", l.brush_w);
    get(j, "vacuum_w", l.vacuum_w);
    get(j, "idle_w", l.idle_w);
    return l;
}

BumpLine parse_bump(const json& j) {
    check_keys(j, "bump line", {"axis", "coord_m"});
    BumpLine b;
    std::string axis = "x";
    get(j, "axis", axis);
    if (axis == "x")
        b.axis = BumpAxis::X;
    else if (axis == "y")
        b.axis = BumpAxis::Y;
    else
        fail("bump line axis must be \"x\" or \"y\"");
    get(j, "coord_m", b.coord_m);
    return b;
}

StartPose parse_start(const json& j) {
    check_keys(j, "start", {"x_m", "y_m", "heading_rad"});
    StartPose s;
    if (j.contains("x_m")) s.x_m = j.at("x_m").get<double>();
    if (j.contains("y_m")) s.y_m = j.at("y_m").get<double>();
    if (j.contains("heading_rad")) s.heading_rad = j.at("heading_rad").get<double>();
    return s;
}

} // namespace

void Scenario::validate() const {
    if (dt_s <= 0)
        fail("dt_s must be positive");
    if (max_sim_s <= 0)
        fail("max_sim_s must be positive");
    if (cell_size_m <= 0)
        fail("cell_size_m must be positive");
    if (cleaning_efficiency <= 0 || cleaning_efficiency > 1)
        fail("cleaning_efficiency must be in (0,1]");
    if (clean_threshold < 0 || clean_threshold >= 1)
        fail("clean_threshold must be in [0,1)");
    if (mission_cfg.cliff_debounce < 1)
        fail("cliff_debounce must be >= 1");
    if (battery.soc < 0 || battery.soc > 1)
        fail("battery soc must be in [0,1]");
    build_workspace(layout); // throws on bad geometry
}

Scenario scenario_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("JSON parse error: ") + e.what());
    }
    check_keys(j, "scenario",
               {"layout", "kinematics", "accel_cfg", "presets", "auto_presets",
                "calibrate_kinematics", "gains", "refs", "mission_cfg", "battery",
                "charger", "loads", "dt_s", "max_sim_s", "seed", "cell_size_m",
                "cleaning_efficiency", "clean_threshold", "footprint_forward_m",
                "footprint_back_m", "footprint_half_width_m",
                "sensor_forward_m", "mount_height_in",
                "max_range_in", "turn_tolerance_rad", "max_turn_s",
                "extra_bump_lines", "start"});
    Scenario s;
    if (j.contains("layout")) s.layout = parse_layout(j.at("layout"));
    if (j.contains("kinematics")) s.kinematics = parse_kinematics(j.at("kinematics"));
    if (j.contains("accel_cfg")) s.accel_cfg = parse_accel(j.at("accel_cfg"));
    if (j.contains("presets")) s.presets = parse_presets(j.at("presets"));
    get(j, "auto_presets", s.auto_presets);
    get(j, "calibrate_kinematics", s.calibrate_kinematics);
    if (j.contains("gains")) s.gains = parse_gains(j.at("gains"));
    if (j.contains("refs")) s.refs = parse_refs(j.at("refs"));
    if (j.contains("mission_cfg")) s.mission_cfg = parse_mission(j.at("mission_cfg"));
    if (j.contains("battery")) s.battery = parse_battery(j.at("battery"));
    if (j.contains("charger")) s.charger = parse_charger(j.at("charger"));
    if (j.contains("loads")) s.loads = parse_loads(j.at("loads"));
    get(j, "dt_s", s.dt_s);
    get(j, "max_sim_s", s.max_sim_s);
    get(j, "seed", s.seed);
    get(j, "cell_size_m", s.cell_size_m);
    get(j, "cleaning_efficiency", s.cleaning_efficiency);
    get(j, "clean_threshold", s.clean_threshold);
    get(j, "footprint_forward_m", s.footprint_forward_m);
    get(j, "footprint_back_m", s.footprint_back_m);
    get(j, "footprint_half_width_m", s.footprint_half_width_m);
    get(j, "sensor_forward_m", s.sensor_forward_m);
    get(j, "mount_height_in", s.mount_height_in);
    get(j, "max_range_in", s.max_range_in);
    get(j, "turn_tolerance_rad", s.turn_tolerance_rad);
    get(j, "max_turn_s", s.max_turn_s);
    if (j.contains("extra_bump_lines"))
        for (const json& b : j.at("extra_bump_lines"))
            s.extra_bump_lines.push_back(parse_bump(b));
    if (j.contains("start")) s.start = parse_start(j.at("start"));
    s.validate();
    return s;
}

Scenario scenario_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open scenario file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return scenario_from_json_text(text);
}

} // namespace solarsim
