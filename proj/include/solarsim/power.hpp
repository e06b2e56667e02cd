#pragma once

namespace solarsim {

// Affine open-circuit voltage between v_empty and v_full.
struct BatteryModel {
    double capacity_ah = 5.0;
    double soc = 1.0;
    double v_full = 12.6;
    double v_empty = 9.0;

    double terminal_v() const { return v_empty + (v_full - v_empty) * soc; }
};

BatteryModel discharge_step(BatteryModel batt, double loads_w, double dt_s);

// Two-stage CC/CV charger: constant current until the voltage cap, then an
// exponentially decaying current until it drops below i_term.
struct ChargerConfig {
    double i_cc = 2.0;
    double v_cv = 12.6;
    double i_term = 0.1;
    double cv_tau_s = 600.0;
};

enum class ChargePhase { CC, CV, Done };

struct ChargerState {
    ChargePhase phase = ChargePhase::CC;
    double t_cv_s = 0; // time spent in the CV phase
};

struct ChargeStepResult {
    BatteryModel battery;
    double current_a = 0;
    ChargerState charger;
};

ChargeStepResult charge_step(BatteryModel batt, const ChargerConfig& cfg,
                             ChargerState st, double dt_s);

struct LoadLedger {
    double drive_w_per_duty = 6.0; // watts per unit |duty|/1000, per motor
    double brush_w = 10.0;
    double vacuum_w = 250.0;
    double idle_w = 1.0;
};

double buck_inductance(double v_in, double v_out, double duty_d, double f_sw,
                       double delta_i);

double lc_corner_frequency(double l_h, double c_f);

double filter_capacitance(double l_h, double f_target);

} // namespace solarsim
