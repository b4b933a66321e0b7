#pragma once

#include <cstdint>
#include <string_view>

namespace squidopt {

/// SplitMix64 finalizer. Used for seeding and for deriving child seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic random stream: xoshiro256** seeded through SplitMix64.
///
/// Every derived quantity (uniform doubles, bounded integers, normals) is
/// computed here from the raw 64-bit outputs, so a given seed produces the
/// same sequence on every platform and standard library. Streams are
/// single-owner; use `split` to hand an independent child to another trial.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) noexcept;

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() noexcept;

    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform01() noexcept;

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) noexcept;

    /// Uniform integer on [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) noexcept;

    /// Standard normal via Box-Muller (one spare value cached).
    double normal() noexcept;

    /// Child stream whose seed is a hash of this stream's seed and `key`.
    /// Does not advance this stream.
    RngStream split(std::uint64_t key) const noexcept;

private:
    std::uint64_t seed_;
    std::uint64_t s_[4];
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

/// FNV-1a over a byte string, for folding names into seeds.
constexpr std::uint64_t fnv1a64(std::string_view text) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Seed for trial `trial` of algorithm `algorithm` under `base_seed`:
/// splitmix64(splitmix64(base_seed ^ fnv1a64(algorithm)) + trial).
constexpr std::uint64_t derive_trial_seed(std::uint64_t base_seed, std::string_view algorithm,
                                          std::uint64_t trial) noexcept {
    return splitmix64(splitmix64(base_seed ^ fnv1a64(algorithm)) + trial);
}

/// Maps a uniform u in [0,1] to the arcsine distribution: sin^2(pi*u/2).
/// The CDF of the result is (2/pi)*asin(sqrt(x)).
double arcsine_from_uniform(double u) noexcept;

/// One arcsine-distributed draw in [0, 1].
double sample_arcsine(RngStream& rng) noexcept;

}  // namespace squidopt
