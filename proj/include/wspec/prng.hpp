#pragma once

#include <cstdint>

namespace wspec {

// SplitMix64, used for every seeded experiment. Each trial derives its own
// stream from (seed, trial index), so sampling stays reproducible no matter
// how the work is split across threads.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Independent child stream; the parent's sequence is unaffected.
    SplitMix64 split(std::uint64_t stream) const {
        return SplitMix64(state_ ^ (0x9e3779b97f4a7c15ULL * (stream + 2)));
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n), n > 0. Modulo bias is irrelevant at our n.
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

}  // namespace wspec
