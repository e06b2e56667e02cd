#include "solarsim/power.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace solarsim {

BatteryModel discharge_step(BatteryModel batt, double loads_w, double dt_s) {
    if (loads_w < 0)
        throw std::invalid_argument("loads must be >= 0");
    if (dt_s <= 0)
        throw std::invalid_argument("dt must be positive");
    const double current = loads_w / batt.terminal_v();
    batt.soc = std::max(0.0, batt.soc - current * dt_s / 3600.0 / batt.capacity_ah);
    return batt;
}

ChargeStepResult charge_step(BatteryModel batt, const ChargerConfig& cfg,
                             ChargerState st, double dt_s) {
    if (dt_s <= 0)
        throw std::invalid_argument("dt must be positive");
    ChargeStepResult out;
    switch (st.phase) {
    case ChargePhase::CC:
        if (batt.terminal_v() >= cfg.v_cv) {
            st.phase = ChargePhase::CV;
            st.t_cv_s = 0;
            out.current_a = cfg.i_cc;
        } else {
            out.current_a = cfg.i_cc;
            batt.soc = std::min(1.0, batt.soc + out.current_a * dt_s / 3600.0 / batt.capacity_ah);
        }
        break;
    case ChargePhase::CV: {
        st.t_cv_s += dt_s;
        out.current_a = cfg.i_cc * std::exp(-st.t_cv_s / cfg.cv_tau_s);
        batt.soc = std::min(1.0, batt.soc + out.current_a * dt_s / 3600.0 / batt.capacity_ah);
        if (out.current_a < cfg.i_term) {
            st.phase = ChargePhase::Done;
            out.current_a = 0;
        }
        break;
    }
    case ChargePhase::Done:
        out.current_a = 0;
        break;
    }
    out.battery = batt;
    out.charger = st;
    return out;
}

double buck_inductance(double v_in, double v_out, double duty_d, double f_sw,
                       double delta_i) {
    if (v_in <= 0 || v_out <= 0 || v_in < v_out)
        throw std::invalid_argument("need v_in >= v_out > 0");
    if (duty_d <= 0 || duty_d >= 1)
        throw std::invalid_argument("duty must be in (0,1)");
    if (f_sw <= 0 || delta_i <= 0)
        throw std::invalid_argument("f_sw and delta_i must be positive");
    return ((v_in - v_out) * duty_d) / (f_sw * 2.0 * delta_i);
}

double lc_corner_frequency(double l_h, double c_f) {
    if (l_h <= 0 || c_f <= 0)
        throw std::invalid_argument("L and C must be positive");
    return 1.0 / (2.0 * M_PI * std::sqrt(l_h * c_f));
}

double filter_capacitance(double l_h, double f_target) {
    if (l_h <= 0 || f_target <= 0)
        throw std::invalid_argument("L and f must be positive");
    const double w = 2.0 * M_PI * f_target;
    return 1.0 / (w * w * l_h);
}

} // namespace solarsim
