#pragma once

#include <cstdint>

namespace hodge {

// splitmix64.  Deterministic across platforms; sweeps rely on byte-identical
// replay for a given seed, not on statistical quality.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] (inclusive).  Modulo bias is irrelevant for the
    // tiny ranges used here.
    long below(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    // Independent child stream; used to decouple trial t of a sweep from
    // the number of draws made by trial t-1.
    Rng child(std::uint64_t salt) {
        Rng mix(state_ ^ (salt * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
        return Rng(mix.next());
    }

private:
    std::uint64_t state_;
};

}  // namespace hodge
