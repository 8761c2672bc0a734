#ifndef ARFCALC_RNG_HPP
#define ARFCALC_RNG_HPP

#include <cstdint>

namespace arfcalc {

/// splitmix64: deterministic across platforms, seeded and recorded in
/// oracle reports for reproducibility.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// uniform in [0, n)
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
    /// uniform in [lo, hi]
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }
    bool flip() { return next() & 1; }
};

} // namespace arfcalc

#endif
