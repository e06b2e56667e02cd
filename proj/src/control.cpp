#include "solarsim/control.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace solarsim {

PidResult pid_step(PidState state, double error, const PidGains& gains) {
    if (!std::isfinite(error))
        throw std::invalid_argument("pid error must be finite");
    const double ep = error;
    double ei = state.ei + error;
    ei = std::clamp(ei, -kIntegralCap, kIntegralCap);
    const double ed = error - state.prev_error;
    PidResult r;
    r.e_total = ep * gains.kp + ei * gains.ki + ed * gains.kd;
    r.state.ei = ei;
    r.state.prev_error = error;
    return r;
}

HeadingLaw auto_heading_law(HeadingMode mode, const SpeedRefs& refs,
                            int zero_g_axis_value) {
    HeadingLaw law;
    law.preset = zero_g_axis_value;
    switch (mode) {
    case HeadingMode::Ascend:
        law.axis = ErrorAxis::Y;
        law.error_sign = 1;
        law.ref = refs.ref_up;
        break;
    case HeadingMode::Descend:
        law.axis = ErrorAxis::Y;
        law.error_sign = -1;
        law.ref = refs.ref_down;
        break;
    case HeadingMode::LateralAway:
        law.axis = ErrorAxis::X;
        law.error_sign = 1;
        law.ref = refs.ref_lateral;
        break;
    case HeadingMode::LateralToward:
        law.axis = ErrorAxis::X;
        law.error_sign = -1;
        law.ref = refs.ref_lateral;
        break;
    }
    return law;
}

HeadingLaw paper_heading_law(HeadingMode mode, const PresetValues& presets,
                             const SpeedRefs& refs) {
    HeadingLaw law;
    law.error_sign = 1;
    switch (mode) {
    case HeadingMode::Ascend:
        law.axis = ErrorAxis::X;
        law.preset = presets.x1_set_up;
        law.ref = refs.ref_up;
        break;
    case HeadingMode::Descend:
        law.axis = ErrorAxis::X;
        law.preset = presets.x1_set_down;
        law.ref = refs.ref_down;
        break;
    case HeadingMode::LateralAway:
    case HeadingMode::LateralToward:
        law.axis = ErrorAxis::Y;
        law.preset = presets.y1_set_turn;
        law.ref = refs.ref_lateral;
        break;
    }
    return law;
}

namespace {
int clamp_duty(double d) {
    return static_cast<int>(std::clamp(d, 0.0, 1000.0));
}
} // namespace

std::pair<MotorCommand, PidState> heading_command(const AccelFrame& frame,
                                                  const HeadingLaw& law,
                                                  PidState pid,
                                                  const PidGains& gains) {
    const int axis_value = (law.axis == ErrorAxis::X) ? frame.x1 : frame.y1;
    const double error = law.error_sign * (axis_value - law.preset);
    const PidResult r = pid_step(pid, error, gains);
    MotorCommand cmd;
    cmd.duty_left = clamp_duty(law.ref + r.e_total);
    cmd.duty_right = clamp_duty(law.ref - r.e_total);
    return {cmd, r.state};
}

TurnResult turn_command(const AccelFrame& frame, int preset, ErrorAxis axis,
                        bool negate_error, PidState pid, const PidGains& gains,
                        TurnProgress progress, const SpeedRefs& refs) {
    const int axis_value = (axis == ErrorAxis::X) ? frame.x1 : frame.y1;
    const double error = axis_value - preset;
    const PidResult r = pid_step(pid, error, gains);
    double e = r.e_total;
    if (negate_error)
        e = -e;

    const int sign = (e >= 0) ? 1 : -1; // zero counts as non-negative
    TurnResult out;
    out.pid = r.state;
    out.progress = progress;
    if (!out.progress.started) {
        out.progress.started = true;
        out.progress.last_sign = sign;
    } else if (sign != out.progress.last_sign) {
        out.progress.last_sign = sign;
        out.progress.flip_count =
            std::min(out.progress.flip_count + 1, out.progress.flip_target);
    }
    out.done = out.progress.flip_count >= out.progress.flip_target;

    // e >= 0 rotates clockwise (left forward, right reverse), else the
    // mirror image. Equal magnitudes keep the turn zero-radius; the rate
    // grows with |e| up to saturation.
    const int magnitude = clamp_duty(refs.ref_turn + std::abs(e));
    if (sign > 0) {
        out.cmd.duty_left = magnitude;
        out.cmd.duty_right = -magnitude;
    } else {
        out.cmd.duty_left = -magnitude;
        out.cmd.duty_right = magnitude;
    }
    return out;
}

MotorCommand stop_command() {
    return MotorCommand{0, 0};
}

} // namespace solarsim
