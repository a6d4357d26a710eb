#pragma once

#include <cstdint>
#include <random>

namespace swarmroute {

/// The single random stream used by every optimizer.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Doubles are built from the top 53 bits of each 64-bit word
/// rather than through std::uniform_real_distribution, whose algorithm is
/// implementation-defined, so a seed reproduces the same run on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi); returns lo when lo == hi.
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 mix of (base, stream); used to give replans and trials their
/// own independent seeds.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace swarmroute
