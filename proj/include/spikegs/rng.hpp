#pragma once

#include <cstdint>
#include <random>

namespace spikegs {

// Mixes two 64-bit values into one seed (splitmix64 finalizer). Used to derive
// independent per-pixel / per-step streams from a base seed.
uint64_t mix_seed(uint64_t a, uint64_t b);

// Deterministic random source. All distributions are generated from raw
// mt19937_64 output with fixed arithmetic, so sequences are identical across
// standard library implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    // uniform in [0,1)
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [lo, hi] inclusive
    int64_t uniform_int(int64_t lo, int64_t hi);

    // standard normal (Box-Muller)
    double normal();

    // Poisson sample; inversion for small means, transformed rejection (PTRS)
    // for large ones.
    int64_t poisson(double mean);

    uint64_t bits() { return eng_(); }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace spikegs
