#include "squidopt/rng.hpp"

#include <cmath>
#include <numbers>

namespace squidopt {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) noexcept : seed_(seed) {
    std::uint64_t x = seed;
    for (auto& word : s_) {
        word = splitmix64(x);
        x += 0x9E3779B97F4A7C15ULL;
    }
}

std::uint64_t RngStream::next_u64() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::uniform01() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform01();
}

std::uint64_t RngStream::below(std::uint64_t n) noexcept {
    // Rejection on the top of the range keeps the result unbiased.
    const std::uint64_t limit = -n % n;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= limit) return r % n;
    }
}

double RngStream::normal() noexcept {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_normal_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

RngStream RngStream::split(std::uint64_t key) const noexcept {
    return RngStream(splitmix64(splitmix64(seed_) ^ splitmix64(key + 0x632BE59BD9B4E019ULL)));
}

double arcsine_from_uniform(double u) noexcept {
    const double s = std::sin(std::numbers::pi * u / 2.0);
    return s * s;
}

double sample_arcsine(RngStream& rng) noexcept {
    // uniform01 excludes 1; the closed form still covers [0, 1) densely.
    return arcsine_from_uniform(rng.uniform01());
}

}  // namespace squidopt
