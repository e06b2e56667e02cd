#pragma once

#include <utility>

#include "solarsim/dynamics.hpp"
#include "solarsim/sensors.hpp"

namespace solarsim {

struct PidGains {
    double kp = 20;
    double ki = 2;
    double kd = 10;
};

// Accumulated error terms. Reset on every behavior change; the integral is
// capped so clamped phases stay recoverable.
struct PidState {
    double ei = 0;
    double prev_error = 0;
};

inline constexpr double kIntegralCap = 10000.0;

struct PidResult {
    double e_total = 0;
    PidState state;
};

// e = ep*kp + ei*ki + ed*kd with ei accumulated and ed differenced.
PidResult pid_step(PidState state, double error, const PidGains& gains);

struct SpeedRefs {
    int ref_up = 800;
    int ref_down = 100;
    int ref_turn = 500;
    int ref_lateral = 300;
    int ref_reverse = 500; // enough to back up-slope against the gravity bias
};

enum class HeadingMode { Ascend, Descend, LateralAway, LateralToward };
enum class ErrorAxis { X, Y };

// Resolved error law for one straight-drive behavior: which frame axis to
// compare, against which preset, with which sign, around which duty ref.
struct HeadingLaw {
    ErrorAxis axis = ErrorAxis::Y;
    int preset = 0;
    int error_sign = 1;
    int ref = 0;
};

// Scenario-consistent law: the error axis is the one perpendicular to the
// drive direction (odd in the heading deviation, so the correction is
// sign-correct), and its preset is the zero-g axis value.
HeadingLaw auto_heading_law(HeadingMode mode, const SpeedRefs& refs,
                            int zero_g_axis_value);

// Literal firmware law using the paper preset table. The forward-axis error
// is even in the heading deviation; kept for fidelity experiments.
HeadingLaw paper_heading_law(HeadingMode mode, const PresetValues& presets,
                             const SpeedRefs& refs);

// error -> PID -> duties (ref + e, ref - e), clamped to [0, 1000].
std::pair<MotorCommand, PidState> heading_command(const AccelFrame& frame,
                                                  const HeadingLaw& law,
                                                  PidState pid,
                                                  const PidGains& gains);

// Sign-alternation progress of a turn about its setpoint.
struct TurnProgress {
    int last_sign = 1;
    int flip_count = 0;
    int flip_target = 5;
    bool started = false;
};

struct TurnResult {
    MotorCommand cmd;
    PidState pid;
    TurnProgress progress;
    bool done = false;
};

// Zero-radius turn tick: counter-rotating wheels at a shared magnitude of
// ref_turn + |e|, rotation direction from the sign of the (optionally
// negated) control output. done fires after flip_target sign alternations.
TurnResult turn_command(const AccelFrame& frame, int preset, ErrorAxis axis,
                        bool negate_error, PidState pid, const PidGains& gains,
                        TurnProgress progress, const SpeedRefs& refs);

// Active brake: both duties zero, immediate zero velocity.
MotorCommand stop_command();

} // namespace solarsim
