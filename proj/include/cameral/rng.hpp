#pragma once

#include <complex>
#include <cstdint>

namespace cameral {

/// xoshiro256** 1.0 (Blackman-Vigna), seeded through splitmix64. Fixed,
/// portable generator so `gen` output is reproducible bit-for-bit across
/// builds and platforms.
class Xoshiro256 {
public:
    explicit Xoshiro256(uint64_t seed) {
        uint64_t x = seed;
        for (auto& w : s_) {
            // splitmix64 step
            x += 0x9e3779b97f4a7c15ull;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            w = z ^ (z >> 31);
        }
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// uniform in [0, 1), 53-bit mantissa
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

    /// uniform in [-1, 1]
    double uniform_sym() { return 2.0 * uniform01() - 1.0; }

    /// uniform on the closed unit disk, by rejection from the square
    std::complex<double> unit_disk() {
        for (;;) {
            const double re = uniform_sym();
            const double im = uniform_sym();
            if (re * re + im * im <= 1.0) return {re, im};
        }
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

} // namespace cameral
