#include "solarsim/sensors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace solarsim {

namespace {
constexpr double kEchoUsPerInch = 2.0 * 74.07;
}

BodyAccel gravity_body_accel(double incline_deg, double heading_rel_upslope_rad) {
    const double incline = incline_deg * M_PI / 180.0;
    BodyAccel a;
    a.ax = std::sin(incline) * std::cos(heading_rel_upslope_rad);
    a.ay = std::sin(incline) * std::sin(heading_rel_upslope_rad);
    a.az = std::cos(incline);
    return a;
}

namespace {
int one_axis_count(double accel_g, const AccelConfig& cfg, RandomStream* rng) {
    const double volts = cfg.zero_g_offset_v + cfg.sensitivity_v_per_g * accel_g;
    long count = std::lround(volts / cfg.vref_v * cfg.adc_full_scale);
    if (rng != nullptr && cfg.noise_sd_counts > 0)
        count += std::lround(rng->normal(cfg.noise_sd_counts));
    return static_cast<int>(std::clamp<long>(count, 0, cfg.adc_full_scale));
}
} // namespace

RawAccelCounts sample_accel_counts(const BodyAccel& accel, const AccelConfig& cfg,
                                   RandomStream& rng) {
    RawAccelCounts c;
    c.x = one_axis_count(accel.ax, cfg, &rng);
    c.y = one_axis_count(accel.ay, cfg, &rng);
    c.z = one_axis_count(accel.az, cfg, &rng);
    return c;
}

namespace {
int reduce_axis(double sum, int n, const AccelConfig& cfg) {
    const double mean = sum / n;
    return static_cast<int>(
        std::lround(100.0 * ((mean / 1024.0) * cfg.vref_v) / cfg.sensitivity_v_per_g));
}
} // namespace

AccelFrame accel_reduce(std::span<const RawAccelCounts> samples,
                        const AccelConfig& cfg) {
    const int expected = 2 * cfg.n_samples;
    if (static_cast<int>(samples.size()) != expected)
        throw std::invalid_argument("accel_reduce expects 2*n_samples frames");
    double sx = 0, sy = 0, sz = 0;
    for (const RawAccelCounts& s : samples) {
        sx += s.x;
        sy += s.y;
        sz += s.z;
    }
    AccelFrame f;
    f.x1 = reduce_axis(sx, expected, cfg);
    f.y1 = reduce_axis(sy, expected, cfg);
    f.z1 = reduce_axis(sz, expected, cfg);
    return f;
}

int expected_axis_value(double accel_g, const AccelConfig& cfg) {
    const int count = one_axis_count(accel_g, cfg, nullptr);
    return reduce_axis(count, 1, cfg);
}

double ultra_distance(double echo_duration_us) {
    if (echo_duration_us < 0)
        throw std::invalid_argument("echo duration must be >= 0");
    return (echo_duration_us / 2.0) / 74.07;
}

double simulate_echo_us(const Workspace& ws, double x, double y,
                        double mount_height_in, double max_range_in) {
    if (mount_height_in < 0)
        throw std::invalid_argument("mount height must be >= 0");
    const bool on_surface = region_at(ws, x, y).has_value();
    return (on_surface ? mount_height_in : max_range_in) * kEchoUsPerInch;
}

bool detect_cliff(double distance_in, double threshold_in) {
    return distance_in > threshold_in;
}

int battery_dot_level(double v, double full_v) {
    if (v < 0)
        throw std::invalid_argument("voltage must be >= 0");
    const int level = static_cast<int>(std::floor(10.0 * v / full_v));
    return std::clamp(level, 0, 10);
}

} // namespace solarsim
