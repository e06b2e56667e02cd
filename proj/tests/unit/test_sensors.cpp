#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "solarsim/rng.hpp"
#include "solarsim/sensors.hpp"

using namespace solarsim;

TEST_CASE("flat ground maps to ADC midpoint 512") {
    AccelConfig cfg;
    cfg.noise_sd_counts = 0.0;
    RandomStream rng(1);
    const BodyAccel a = gravity_body_accel(0.0, 0.42); // heading irrelevant on flat
    RawAccelCounts c = sample_accel_counts(a, cfg, rng);
    CHECK(c.x == 512); // round(1.65/3.3 * 1023)
    CHECK(c.y == 512);
    RawAccelCounts c2 = sample_accel_counts(a, cfg, rng);
    CHECK(c.x == c2.x); // zero noise is deterministic
    CHECK(c.z == c2.z);
}

TEST_CASE("ADC counts clamp at full scale") {
    AccelConfig cfg;
    cfg.noise_sd_counts = 0.0;
    RandomStream rng(1);
    BodyAccel a;
    a.ax = 50.0; // would exceed vref
    a.ay = -50.0;
    a.az = 1.0;
    RawAccelCounts c = sample_accel_counts(a, cfg, rng);
    CHECK(c.x == cfg.adc_full_scale);
    CHECK(c.y == 0);
}

TEST_CASE("accel_reduce converts uniform 512 counts to 206") {
    AccelConfig cfg; // n_samples 5, two sensors
    std::vector<RawAccelCounts> samples(10, RawAccelCounts{512, 512, 512});
    AccelFrame f = accel_reduce(samples, cfg);
    CHECK(f.x1 == 206);
    CHECK(f.y1 == 206);
    CHECK(f.z1 == 206);

    std::vector<RawAccelCounts> zeros(10, RawAccelCounts{0, 0, 0});
    AccelFrame z = accel_reduce(zeros, cfg);
    CHECK(z.x1 == 0);

    // sensor A at 500, sensor B at 524: same mean, same output
    std::vector<RawAccelCounts> mixed;
    for (int i = 0; i < 5; ++i) mixed.push_back(RawAccelCounts{500, 500, 500});
    for (int i = 0; i < 5; ++i) mixed.push_back(RawAccelCounts{524, 524, 524});
    AccelFrame m = accel_reduce(mixed, cfg);
    CHECK(m.x1 == 206);

    std::vector<RawAccelCounts> wrong(9);
    CHECK_THROWS_AS(accel_reduce(wrong, cfg), std::invalid_argument);
}

TEST_CASE("accel_reduce is permutation invariant") {
    AccelConfig cfg;
    std::vector<RawAccelCounts> samples;
    std::mt19937 shuffler(7);
    for (int i = 0; i < 10; ++i)
        samples.push_back(RawAccelCounts{400 + 13 * i, 300 + 7 * i, 600 - 5 * i});
    AccelFrame base = accel_reduce(samples, cfg);
    for (int k = 0; k < 20; ++k) {
        std::shuffle(samples.begin(), samples.end(), shuffler);
        AccelFrame f = accel_reduce(samples, cfg);
        CHECK(f.x1 == base.x1);
        CHECK(f.y1 == base.y1);
        CHECK(f.z1 == base.z1);
    }
}

TEST_CASE("gravity body components follow incline and heading") {
    const BodyAccel up = gravity_body_accel(30.0, 0.0); // facing up-slope
    CHECK(up.ax == doctest::Approx(0.5));
    CHECK(up.ay == doctest::Approx(0.0));
    CHECK(up.az == doctest::Approx(0.8660254037844387));
    const BodyAccel across = gravity_body_accel(30.0, 1.5707963267948966);
    CHECK(across.ax == doctest::Approx(0.0));
    CHECK(across.ay == doctest::Approx(0.5));
}

TEST_CASE("ultrasonic conversion and cliff threshold") {
    CHECK(ultra_distance(0.0) == doctest::Approx(0.0));
    CHECK(ultra_distance(296.28) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(ultra_distance(592.56) == doctest::Approx(4.0).epsilon(1e-6));
    CHECK_THROWS_AS(ultra_distance(-1.0), std::invalid_argument);

    CHECK_FALSE(detect_cliff(2.0));
    CHECK(detect_cliff(100.0));
    CHECK_FALSE(detect_cliff(4.0)); // strict inequality
    CHECK(detect_cliff(4.0001));
}

TEST_CASE("echo simulation round-trips through the distance formula") {
    Workspace ws = build_workspace(ArrayLayout{});
    const double on = simulate_echo_us(ws, 0.5, 0.5, 2.0);
    CHECK(on == doctest::Approx(296.28));
    CHECK(ultra_distance(on) == doctest::Approx(2.0).epsilon(1e-9));
    const double off = simulate_echo_us(ws, 0.5, 1.5, 2.0);
    CHECK(off == doctest::Approx(14814.0).epsilon(1e-6));
    CHECK(ultra_distance(off) == doctest::Approx(100.0).epsilon(1e-9));
    CHECK(simulate_echo_us(ws, 0.5, 0.5, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("battery dot level quantizer") {
    CHECK(battery_dot_level(12.6) == 10);
    CHECK(battery_dot_level(0.0) == 0);
    CHECK(battery_dot_level(6.3) == 5);
    CHECK(battery_dot_level(20.0) == 10); // clamped
    int prev = 0;
    for (double v = 0.0; v <= 13.0; v += 0.1) {
        int lvl = battery_dot_level(v);
        CHECK(lvl >= prev);
        prev = lvl;
    }
}

TEST_CASE("expected_axis_value matches the noisy pipeline mean") {
    AccelConfig cfg;
    CHECK(expected_axis_value(0.0, cfg) == 206);
    // ascending a 30 deg slope, forward axis sees 0.5 g
    CHECK(expected_axis_value(0.5, cfg) == 256);
}
