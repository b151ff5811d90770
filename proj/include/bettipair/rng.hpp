#ifndef BETTIPAIR_RNG_HPP
#define BETTIPAIR_RNG_HPP

#include <cstdint>

namespace bettipair {

// Deterministic 64-bit generator (splitmix64).  We avoid <random>
// distributions on purpose: their output is implementation-defined, and
// certificates must replay bit-identically across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection; n must be positive.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~0ULL - ~0ULL % n;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

    // Derive an independent stream (for parallel or per-stage use).
    Rng fork() { return Rng(next() ^ 0xd1b54a32d192ed03ULL); }

private:
    std::uint64_t state_;
};

} // namespace bettipair

#endif
