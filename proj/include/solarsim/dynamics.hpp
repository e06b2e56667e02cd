#pragma once

namespace solarsim {

// First-order kinematics. free_speed_mps / gravity_gain_mps defaults are the
// calibrated values for the 30-degree, 4 cm/s band (see calibrate_speed_band).
struct KinematicParams {
    double track_width_m = 0.15;
    double wheel_diameter_m = 0.113;
    double free_speed_mps = 0.08 / 0.9;
    double gravity_gain_mps = 0.028 / 0.45;
    double bump_slow_factor = 0.3;
    double bump_heading_kick_rad = 0.15;
};

// Signed PWM compare values against a period of 1000; sign is direction.
struct MotorCommand {
    int duty_left = 0;
    int duty_right = 0;
};

// Pose in workspace coordinates. heading_rad is the standard math angle:
// +y (up-slope) is pi/2. Normalized to (-pi, pi].
struct RobotState {
    double x_m = 0;
    double y_m = 0;
    double heading_rad = 0;
    double speed_mps = 0; // last commanded ground speed, diagnostic
};

enum class BumpContact { None, LeftFirst, RightFirst };

double normalize_angle(double a);

// Ground speed of one wheel: duty-proportional drive minus a shared
// gravity bias of gravity_gain * sin(incline) * cos(heading rel. up-slope).
double wheel_speed(int duty, double incline_deg, double heading_rad,
                   const KinematicParams& params);

// Forward-Euler step. A bump contact scales the translational speed by
// bump_slow_factor and kicks the heading toward the leading wheel.
RobotState step(const RobotState& state, const MotorCommand& cmd,
                double incline_deg, BumpContact bump, double dt,
                const KinematicParams& params);

struct SpeedBandTargets {
    double incline_deg = 30.0;
    int duty_up = 800;
    int duty_down = 100;
    double ascend_mps = 0.04;  // band midpoint of [0.02, 0.06]
    double descend_mps = 0.04;
};

// Solves the 2x2 linear system so that ascending at duty_up and descending
// at duty_down on the given incline hit the target ground speeds exactly.
KinematicParams calibrate_speed_band(KinematicParams params,
                                     const SpeedBandTargets& targets = {});

} // namespace solarsim
