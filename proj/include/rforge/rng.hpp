#pragma once

#include <cstdint>
#include <random>

namespace rforge {

// Deterministic RNG wrapper. All randomized operations take an explicit
// 64-bit seed; sub-streams are derived with a splitmix hash so that trial k
// of a run is independent of how trials 0..k-1 consumed their generators.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // Uniform in [0, n), n >= 1. Rejection-free multiply-shift would bias for
    // huge n; plain rejection keeps draws exactly uniform.
    uint32_t below(uint32_t n) {
        uint64_t threshold = (~uint64_t{0} / n) * n;
        uint64_t x;
        do { x = next_u64(); } while (x >= threshold);
        return uint32_t(x % n);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Stable seed for sub-stream `stream` of run seed `seed`.
    static uint64_t derive(uint64_t seed, uint64_t stream) {
        return mix(seed ^ mix(stream + 0x632be59bd9b4e019ull));
    }

private:
    std::mt19937_64 eng_;
};

} // namespace rforge
