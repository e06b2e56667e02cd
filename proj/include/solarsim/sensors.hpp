#pragma once

#include <span>

#include "solarsim/rng.hpp"
#include "solarsim/world.hpp"

namespace solarsim {

struct AccelConfig {
    double sensitivity_v_per_g = 0.8;
    double zero_g_offset_v = 1.65;
    double vref_v = 3.3;
    int adc_full_scale = 1023;
    double noise_sd_counts = 2.0;
    int n_samples = 5;
};

// Reduced axis values in centi-g counts, zero-g bias included.
struct AccelFrame {
    int x1 = 0;
    int y1 = 0;
    int z1 = 0;
};

// Firmware preset constants. Documented defaults; the engine recomputes
// scenario-consistent values at startup unless auto presets are disabled.
struct PresetValues {
    int x1_set_up = 218;
    int x1_set_down = 218;
    int x1_set_turn = 217;
    int y1_set_turn = 247;
};

struct RawAccelCounts {
    int x = 0;
    int y = 0;
    int z = 0;
};

// Gravity components in the body frame (g units). Body x points forward.
// alpha is the heading relative to up-slope.
struct BodyAccel {
    double ax = 0, ay = 0, az = 1;
};

BodyAccel gravity_body_accel(double incline_deg, double heading_rel_upslope_rad);

RawAccelCounts sample_accel_counts(const BodyAccel& accel, const AccelConfig& cfg,
                                   RandomStream& rng);

// Reduction of 2*n_samples raw frames (two sensors, n_samples each):
// per-axis mean, then centi-g conversion.
AccelFrame accel_reduce(std::span<const RawAccelCounts> samples,
                        const AccelConfig& cfg);

// Noise-free reduced value for a single axis at the given acceleration.
// Used to derive scenario-consistent presets.
int expected_axis_value(double accel_g, const AccelConfig& cfg);

double ultra_distance(double echo_duration_us);

double simulate_echo_us(const Workspace& ws, double x, double y,
                        double mount_height_in, double max_range_in = 100.0);

bool detect_cliff(double distance_in, double threshold_in = 4.0);

int battery_dot_level(double v, double full_v = 12.6);

} // namespace solarsim
