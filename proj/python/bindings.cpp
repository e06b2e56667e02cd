#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "solarsim/engine.hpp"

namespace py = pybind11;
using namespace solarsim;

PYBIND11_MODULE(_core, m) {
    m.doc() = "solar panel cleaning robot simulator core";

    py::enum_<MissionState>(m, "MissionState")
        .value("Ascend", MissionState::Ascend)
        .value("ReverseTop", MissionState::ReverseTop)
        .value("TurnAtTop", MissionState::TurnAtTop)
        .value("LateralTop", MissionState::LateralTop)
        .value("TurnToDescend", MissionState::TurnToDescend)
        .value("Descend", MissionState::Descend)
        .value("ReverseBottom", MissionState::ReverseBottom)
        .value("BatteryCheck", MissionState::BatteryCheck)
        .value("TurnAtBottom", MissionState::TurnAtBottom)
        .value("LateralBottom", MissionState::LateralBottom)
        .value("TurnToAscend", MissionState::TurnToAscend)
        .value("TransitToDock", MissionState::TransitToDock)
        .value("Docking", MissionState::Docking)
        .value("Charging", MissionState::Charging)
        .value("ResumeTransit", MissionState::ResumeTransit)
        .value("Idle", MissionState::Idle);

    m.def("mission_state_name",
          [](MissionState s) { return std::string(mission_state_name(s)); });

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_static("from_json", &scenario_from_json_text, py::arg("text"))
        .def_static("from_file", &scenario_from_json_file, py::arg("path"))
        .def_readwrite("dt_s", &Scenario::dt_s)
        .def_readwrite("max_sim_s", &Scenario::max_sim_s)
        .def_readwrite("seed", &Scenario::seed)
        .def_readwrite("auto_presets", &Scenario::auto_presets);

    py::class_<TraceRow>(m, "TraceRow")
        .def_readonly("t_s", &TraceRow::t_s)
        .def_readonly("state", &TraceRow::state)
        .def_readonly("ultra_in", &TraceRow::ultra_in)
        .def_readonly("duty_left", &TraceRow::duty_left)
        .def_readonly("duty_right", &TraceRow::duty_right)
        .def_readonly("accel_x", &TraceRow::accel_x)
        .def_readonly("accel_y", &TraceRow::accel_y)
        .def_readonly("battery_v", &TraceRow::battery_v)
        .def_readonly("x_m", &TraceRow::x_m)
        .def_readonly("y_m", &TraceRow::y_m)
        .def_readonly("heading_rad", &TraceRow::heading_rad)
        .def_readonly("vacuum_on", &TraceRow::vacuum_on);

    py::class_<Event>(m, "Event")
        .def_readonly("t_s", &Event::t_s)
        .def_readonly("from_state", &Event::from)
        .def_readonly("to_state", &Event::to);

    py::class_<RunSummary>(m, "RunSummary")
        .def_readonly("coverage_fraction", &RunSummary::coverage_fraction)
        .def_readonly("columns_completed", &RunSummary::columns_completed)
        .def_readonly("dock_events", &RunSummary::dock_events)
        .def_readonly("resume_column", &RunSummary::resume_column)
        .def_readonly("mean_ascend_speed_mps", &RunSummary::mean_ascend_speed_mps)
        .def_readonly("mean_descend_speed_mps",
                      &RunSummary::mean_descend_speed_mps)
        .def_readonly("sim_wall_ratio", &RunSummary::sim_wall_ratio);

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("trace", &RunResult::trace)
        .def_readonly("events", &RunResult::events)
        .def_readonly("summary", &RunResult::summary)
        .def_readonly("interruption_column", &RunResult::interruption_column)
        .def_readonly("resume_distance_ticks", &RunResult::resume_distance_ticks)
        .def_readonly("bump_times_s", &RunResult::bump_times_s)
        .def("trace_csv", [](const RunResult& r) { return trace_csv(r.trace); })
        .def("events_text",
             [](const RunResult& r) { return events_text(r.events); })
        .def("summary_text",
             [](const RunResult& r) { return summary_text(r.summary); });

    m.def("run", &run, py::arg("scenario"),
          py::call_guard<py::gil_scoped_release>());

    // control
    py::class_<PidGains>(m, "PidGains")
        .def(py::init<>())
        .def_readwrite("kp", &PidGains::kp)
        .def_readwrite("ki", &PidGains::ki)
        .def_readwrite("kd", &PidGains::kd);
    py::class_<PidState>(m, "PidState")
        .def(py::init<>())
        .def_readwrite("ei", &PidState::ei)
        .def_readwrite("prev_error", &PidState::prev_error);
    py::class_<PidResult>(m, "PidResult")
        .def_readonly("e_total", &PidResult::e_total)
        .def_readonly("state", &PidResult::state);
    m.def("pid_step", &pid_step, py::arg("state"), py::arg("error"),
          py::arg("gains"));

    // power electronics and charging
    m.def("buck_inductance", &buck_inductance, py::arg("v_in"), py::arg("v_out"),
          py::arg("duty_d"), py::arg("f_sw"), py::arg("delta_i"));
    m.def("lc_corner_frequency", &lc_corner_frequency, py::arg("l_h"),
          py::arg("c_f"));
    m.def("filter_capacitance", &filter_capacitance, py::arg("l_h"),
          py::arg("f_target"));

    py::enum_<ChargePhase>(m, "ChargePhase")
        .value("CC", ChargePhase::CC)
        .value("CV", ChargePhase::CV)
        .value("Done", ChargePhase::Done);
    py::class_<BatteryModel>(m, "BatteryModel")
        .def(py::init<>())
        .def_readwrite("capacity_ah", &BatteryModel::capacity_ah)
        .def_readwrite("soc", &BatteryModel::soc)
        .def_readwrite("v_full", &BatteryModel::v_full)
        .def_readwrite("v_empty", &BatteryModel::v_empty)
        .def("terminal_v", &BatteryModel::terminal_v);
    py::class_<ChargerConfig>(m, "ChargerConfig")
        .def(py::init<>())
        .def_readwrite("i_cc", &ChargerConfig::i_cc)
        .def_readwrite("v_cv", &ChargerConfig::v_cv)
        .def_readwrite("i_term", &ChargerConfig::i_term)
        .def_readwrite("cv_tau_s", &ChargerConfig::cv_tau_s);
    py::class_<ChargerState>(m, "ChargerState")
        .def(py::init<>())
        .def_readwrite("phase", &ChargerState::phase)
        .def_readwrite("t_cv_s", &ChargerState::t_cv_s);
    py::class_<ChargeStepResult>(m, "ChargeStepResult")
        .def_readonly("battery", &ChargeStepResult::battery)
        .def_readonly("current_a", &ChargeStepResult::current_a)
        .def_readonly("charger", &ChargeStepResult::charger);
    m.def("charge_step", &charge_step, py::arg("battery"), py::arg("config"),
          py::arg("state"), py::arg("dt_s"));
    m.def("discharge_step", &discharge_step, py::arg("battery"),
          py::arg("loads_w"), py::arg("dt_s"));

    // sensor conversions
    m.def("ultra_distance", &ultra_distance, py::arg("echo_duration_us"));
    m.def("detect_cliff", &detect_cliff, py::arg("distance_in"),
          py::arg("threshold_in") = 4.0);
    m.def("battery_dot_level", &battery_dot_level, py::arg("v"),
          py::arg("full_v") = 12.6);
}
