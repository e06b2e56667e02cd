// solarsim command line: scenario simulation plus the power-electronics
// design helpers.
//
//   solarsim simulate --scenario s.json --trace out.csv --summary out.txt
//   solarsim buck-design --vin 12.6 --vout 5.0 --fsw 260000 --ripple 0.3
//   solarsim charge-profile --capacity 5 --icc 2 --iterm 0.1 --tau 600 --out p.csv

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "solarsim/engine.hpp"
#include "solarsim/power.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return false;
    }
    out << text;
    out.flush();
    if (!out) {
        std::cerr << "error: write failed for " << path << "\n";
        return false;
    }
    return true;
}

int cmd_simulate(const std::string& scenario_path, const std::string& trace_path,
                 const std::string& summary_path,
                 const std::optional<std::uint64_t>& seed,
                 const std::optional<double>& max_sim_s,
                 const std::string& events_path) {
    solarsim::Scenario sc;
    try {
        sc = solarsim::scenario_from_json_file(scenario_path);
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    if (seed)
        sc.seed = *seed;
    if (max_sim_s)
        sc.max_sim_s = *max_sim_s;

    solarsim::RunResult result;
    try {
        result = solarsim::run(sc);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    if (!write_file(trace_path, solarsim::trace_csv(result.trace)))
        return kExitIo;
    if (!write_file(summary_path, solarsim::summary_text(result.summary)))
        return kExitIo;
    if (!events_path.empty() &&
        !write_file(events_path, solarsim::events_text(result.events)))
        return kExitIo;
    return kExitOk;
}

int cmd_buck_design(double vin, double vout, double fsw, double ripple) {
    double l = 0;
    try {
        const double duty = vout / vin;
        l = solarsim::buck_inductance(vin, vout, duty, fsw, ripple);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    std::printf("inductance_h %.6g\n", l);
    if (l > 0) {
        // Capacitor sized for a 1 kHz corner, a convenient ripple-free target
        // well below the switching frequency.
        const double c = solarsim::filter_capacitance(l, 1000.0);
        std::printf("capacitance_f_1khz %.6g\n", c);
        std::printf("corner_hz %.6g\n", solarsim::lc_corner_frequency(l, c));
    }
    return kExitOk;
}

int cmd_charge_profile(double capacity, double icc, double iterm, double tau,
                       const std::string& out_path, double soc0, double dt) {
    if (capacity <= 0 || icc <= 0 || iterm <= 0 || tau <= 0 || dt <= 0 ||
        soc0 < 0 || soc0 > 1) {
        std::cerr << "error: all charge-profile parameters must be positive "
                     "and soc in [0,1]\n";
        return kExitValidation;
    }
    solarsim::BatteryModel batt;
    batt.capacity_ah = capacity;
    batt.soc = soc0;
    solarsim::ChargerConfig cfg;
    cfg.i_cc = icc;
    cfg.i_term = iterm;
    cfg.cv_tau_s = tau;
    solarsim::ChargerState st;

    std::string csv = "t_s,phase,terminal_v,current_a,soc\n";
    char buf[128];
    const double max_t = 24 * 3600.0;
    double t = 0;
    while (t < max_t) {
        const auto r = solarsim::charge_step(batt, cfg, st, dt);
        const char* phase = st.phase == solarsim::ChargePhase::CC   ? "CC"
                            : st.phase == solarsim::ChargePhase::CV ? "CV"
                                                                    : "Done";
        std::snprintf(buf, sizeof(buf), "%.6g,%s,%.6g,%.6g,%.6g\n", t, phase,
                      batt.terminal_v(), r.current_a, batt.soc);
        csv += buf;
        batt = r.battery;
        st = r.charger;
        t += dt;
        if (st.phase == solarsim::ChargePhase::Done) {
            std::snprintf(buf, sizeof(buf), "%.6g,Done,%.6g,0,%.6g\n", t,
                          batt.terminal_v(), batt.soc);
            csv += buf;
            break;
        }
    }
    if (!write_file(out_path, csv))
        return kExitIo;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"solar panel cleaning robot simulator"};
    app.require_subcommand(1);

    std::string scenario_path, trace_path, summary_path, events_path;
    std::optional<std::uint64_t> seed;
    std::optional<double> max_sim_s;
    auto* sim = app.add_subcommand("simulate", "run a scenario and emit traces");
    sim->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    sim->add_option("--trace", trace_path, "trace CSV output path")->required();
    sim->add_option("--summary", summary_path, "summary output path")->required();
    sim->add_option("--seed", seed, "override the scenario seed");
    sim->add_option("--max-sim-s", max_sim_s, "override max simulated seconds");
    sim->add_option("--events", events_path, "optional transition log path");

    double vin = 12.6, vout = 5.0, fsw = 260000.0, ripple = 0.3;
    auto* buck = app.add_subcommand("buck-design", "buck converter LC sizing");
    buck->add_option("--vin", vin, "input volts")->required();
    buck->add_option("--vout", vout, "output volts")->required();
    buck->add_option("--fsw", fsw, "switching frequency, Hz")->required();
    buck->add_option("--ripple", ripple, "current ripple delta-i, A")->required();

    double capacity = 5.0, icc = 2.0, iterm = 0.1, tau = 600.0;
    double soc0 = 0.0, dt = 1.0;
    std::string profile_out;
    auto* prof = app.add_subcommand("charge-profile", "CC/CV charge curve CSV");
    prof->add_option("--capacity", capacity, "battery capacity, Ah")->required();
    prof->add_option("--icc", icc, "constant current, A")->required();
    prof->add_option("--iterm", iterm, "termination current, A")->required();
    prof->add_option("--tau", tau, "CV decay time constant, s")->required();
    prof->add_option("--out", profile_out, "output CSV path")->required();
    prof->add_option("--soc", soc0, "initial state of charge (default 0)");
    prof->add_option("--dt", dt, "integration step, s (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    if (sim->parsed())
        return cmd_simulate(scenario_path, trace_path, summary_path, seed,
                            max_sim_s, events_path);
    if (buck->parsed())
        return cmd_buck_design(vin, vout, fsw, ripple);
    return cmd_charge_profile(capacity, icc, iterm, tau, profile_out, soc0, dt);
}
