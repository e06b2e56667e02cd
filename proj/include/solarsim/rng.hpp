#pragma once

#include <cstdint>
#include <random>

namespace solarsim {

// Deterministic random stream. Gaussian draws use an explicit Box-Muller
// so output is identical across standard library implementations.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

    // Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Normal draw with the given standard deviation (mean 0).
    double normal(double sd);

    // Derive an independent stream for a named sub-source.
    RandomStream split(std::uint64_t salt) const;

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace solarsim
