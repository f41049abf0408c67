#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace adcsim {

// Gaussian generator with an explicit Box-Muller transform over mt19937_64.
// std::normal_distribution is implementation-defined; this keeps noise
// streams bit-reproducible for a given seed.
class NormalRng {
public:
    explicit NormalRng(uint64_t seed) : eng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    double uniform01() {
        // 53-bit mantissa in [0,1)
        return (eng_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Deterministic per-trial seed derivation (splitmix64 step).
inline uint64_t derive_seed(uint64_t base, uint64_t index) {
    uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace adcsim
