#pragma once

// Counter-based generator: Philox-4x32-10 (Salmon et al., SC 2011).
// Every coefficient draw is keyed by (master_seed, stream, index), so samples
// are reproducible regardless of execution order or thread count.

#include <array>
#include <cstdint>

#include "cpzeros/common.hpp"

namespace cpzeros::rng {

namespace detail {

inline constexpr std::uint32_t kPhiloxW32A = 0x9E3779B9u;
inline constexpr std::uint32_t kPhiloxW32B = 0xBB67AE85u;
inline constexpr std::uint32_t kPhiloxM4x32A = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxM4x32B = 0xCD9E8D57u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(p);
    hi = static_cast<std::uint32_t>(p >> 32);
}

}  // namespace detail

// One 10-round Philox block: 128-bit counter, 64-bit key -> 128 random bits.
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
    using namespace detail;
    for (int round = 0; round < 10; ++round) {
        std::uint32_t lo0, hi0, lo1, hi1;
        mul_hi_lo(kPhiloxM4x32A, ctr[0], lo0, hi0);
        mul_hi_lo(kPhiloxM4x32B, ctr[2], lo1, hi1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kPhiloxW32A;
        key[1] += kPhiloxW32B;
    }
    return ctr;
}

struct UniformPair {
    double open;      // (0, 1]
    double half_open; // [0, 1)
};

// The 128 output bits of one block give two 53-bit doubles.
inline UniformPair uniform_pair(std::uint64_t master_seed, std::uint64_t stream, std::uint64_t index) {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(master_seed),
                                              static_cast<std::uint32_t>(master_seed >> 32)};
    const auto w = philox4x32(ctr, key);
    const std::uint64_t u = (static_cast<std::uint64_t>(w[1]) << 32) | w[0];
    const std::uint64_t v = (static_cast<std::uint64_t>(w[3]) << 32) | w[2];
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    return {(static_cast<double>(u >> 11) + 1.0) * kScale,
            static_cast<double>(v >> 11) * kScale};
}

// Standard complex Gaussian: E c = 0, E c^2 = 0, E |c|^2 = 1
// (real and imaginary parts are independent N(0, 1/2)).
// Polar Box-Muller: |c|^2 ~ Exp(1), phase uniform.
inline Complex standard_complex_gaussian(std::uint64_t master_seed, std::uint64_t stream,
                                         std::uint64_t index) {
    const UniformPair u = uniform_pair(master_seed, stream, index);
    const double r = std::sqrt(-std::log(u.open));
    const double th = 2.0 * kPi * u.half_open;
    return {r * std::cos(th), r * std::sin(th)};
}

// Domain-separation salt for auxiliary draws (test points, witness sampling)
// so they never collide with section coefficient streams.
inline std::uint64_t salted_seed(std::uint64_t master_seed, std::uint64_t salt) {
    std::uint64_t z = master_seed ^ (salt * 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace cpzeros::rng
