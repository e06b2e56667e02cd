#include "solarsim/rng.hpp"

#include <cmath>

namespace solarsim {

double RandomStream::normal(double sd) {
    if (has_spare_) {
        has_spare_ = false;
        return spare_ * sd;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta) * sd;
}

RandomStream RandomStream::split(std::uint64_t salt) const {
    std::mt19937_64 probe = gen_;
    const std::uint64_t base = probe();
    // splitmix64 finalizer over (base ^ salt)
    std::uint64_t z = base ^ (salt + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return RandomStream(z);
}

} // namespace solarsim
