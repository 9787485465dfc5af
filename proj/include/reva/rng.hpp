#pragma once

#include <cstddef>
#include <cstdint>

namespace reva {

// splitmix64 finalizer; the workhorse for seed derivation.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Order-sensitive combine: mix(a,b) != mix(b,a).
inline uint64_t mix64(uint64_t a, uint64_t b) {
    return splitmix64(a ^ (splitmix64(b) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

inline uint64_t mix64(uint64_t a, uint64_t b, uint64_t c) {
    return mix64(mix64(a, b), c);
}

inline uint64_t mix64(uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
    return mix64(mix64(a, b, c), d);
}

uint64_t fnv1a64(const void* data, size_t len);
uint64_t fnv1a64_append(uint64_t state, const void* data, size_t len);

// Self-contained xoshiro256++ stream. std::mt19937 plus the standard
// distributions is not bit-reproducible across library implementations,
// so every sampler here is spelled out.
class Rng {
public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();
    // Unbiased integer in [0, n), n >= 1.
    uint64_t below(uint64_t n);
    // [0, 1)
    double uniform();
    // [a, b)
    double uniform(double a, double b);
    // Standard normal via Box-Muller (one variate per call).
    double normal();
    // Knuth multiplication method; fine for lambda up to a few hundred.
    int poisson(double lambda);
    // Marsaglia-Tsang; shape > 0, unit scale.
    double gamma(double shape);

private:
    uint64_t s_[4];
};

} // namespace reva
