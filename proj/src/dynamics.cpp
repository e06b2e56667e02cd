#include "solarsim/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace solarsim {

double normalize_angle(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a > M_PI)
        a -= 2.0 * M_PI;
    else if (a <= -M_PI)
        a += 2.0 * M_PI;
    return a;
}

double wheel_speed(int duty, double incline_deg, double heading_rad,
                   const KinematicParams& params) {
    if (duty < -1000 || duty > 1000)
        throw std::invalid_argument("|duty| must be <= 1000");
    const double drive = params.free_speed_mps * duty / 1000.0;
    const double incline = incline_deg * M_PI / 180.0;
    // cos of the heading relative to up-slope (+y).
    const double along_slope = std::sin(heading_rad);
    return drive - params.gravity_gain_mps * std::sin(incline) * along_slope;
}

RobotState step(const RobotState& state, const MotorCommand& cmd,
                double incline_deg, BumpContact bump, double dt,
                const KinematicParams& params) {
    if (dt <= 0)
        throw std::invalid_argument("dt must be positive");
    const double ul = wheel_speed(cmd.duty_left, incline_deg, state.heading_rad, params);
    const double ur = wheel_speed(cmd.duty_right, incline_deg, state.heading_rad, params);
    // Antisymmetric commands pivot in place: the counter-rotating wheels hold
    // the body against the slope, so the gravity bias (which cancels in omega
    // but not in the naive wheel mean) produces no translation.
    double v = (cmd.duty_left == -cmd.duty_right) ? 0.0 : (ul + ur) / 2.0;
    const double omega = (ur - ul) / params.track_width_m;
    double kick = 0.0;
    if (bump != BumpContact::None) {
        v *= params.bump_slow_factor;
        kick = (bump == BumpContact::LeftFirst) ? params.bump_heading_kick_rad
                                                : -params.bump_heading_kick_rad;
    }
    RobotState next = state;
    next.x_m = state.x_m + v * std::cos(state.heading_rad) * dt;
    next.y_m = state.y_m + v * std::sin(state.heading_rad) * dt;
    next.heading_rad = normalize_angle(state.heading_rad + omega * dt + kick);
    next.speed_mps = v;
    return next;
}

KinematicParams calibrate_speed_band(KinematicParams params,
                                     const SpeedBandTargets& targets) {
    const double du = targets.duty_up / 1000.0;
    const double dd = targets.duty_down / 1000.0;
    const double s = std::sin(targets.incline_deg * M_PI / 180.0);
    if (du + dd <= 0)
        throw std::invalid_argument("duty targets must not both be zero");
    double free_speed = 0, gravity_gain = 0;
    if (std::abs(s) < 1e-12) {
        // No slope term; the two equations must agree on free_speed.
        free_speed = targets.ascend_mps / du;
        if (std::abs(free_speed * dd - targets.descend_mps) > 1e-9)
            throw std::invalid_argument("speed targets infeasible on zero incline");
        gravity_gain = 0;
    } else {
        // f*du - g*s = ascend ; f*dd + g*s = descend
        free_speed = (targets.ascend_mps + targets.descend_mps) / (du + dd);
        gravity_gain = (du * targets.descend_mps - dd * targets.ascend_mps) / (s * (du + dd));
    }
    if (free_speed <= 0 || gravity_gain < 0)
        throw std::invalid_argument("speed band targets infeasible");
    params.free_speed_mps = free_speed;
    params.gravity_gain_mps = gravity_gain;
    return params;
}

} // namespace solarsim
