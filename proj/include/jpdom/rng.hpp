#pragma once

#include <cstdint>

namespace jpdom {

/* Counter-based random stream: every walk owns an independent generator keyed
 * by (seed, walk_index), so estimates are reproducible bit-for-bit no matter
 * how walks are scheduled or distributed across workers. */
class WalkRng {
public:
    WalkRng(std::uint64_t seed, std::uint64_t walk_index)
        : state_(mix(seed ^ mix(walk_index + 0x9E3779B97F4A7C15ull))) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [a, b)
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDull;
        z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ull;
        return z ^ (z >> 33);
    }
    std::uint64_t state_;
};

} // namespace jpdom
