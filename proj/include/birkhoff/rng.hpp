#pragma once

#include <cstdint>
#include <vector>

namespace birkhoff {

/// xoshiro256++ 1.0 (Blackman/Vigna public-domain constants), seeded through
/// splitmix64 as its authors recommend. All samplers take an explicit seed
/// and draw from one of these, so a (seed, call sequence) pair pins the
/// output stream exactly; nothing reads hidden global RNG state.
class Xoshiro256PlusPlus {
public:
    explicit Xoshiro256PlusPlus(std::uint64_t seed) noexcept {
        // splitmix64 expansion of the 64-bit seed into the 256-bit state
        std::uint64_t x = seed;
        for (auto& word : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 mantissa bits.
    double next_double() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * next_double(); }

    /// Unbiased uniform integer in [0, bound) via rejection sampling.
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
        std::uint64_t x;
        do {
            x = next();
        } while (x < threshold);
        return x % bound;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

/// Fisher-Yates shuffle of the identity, row -> column form.
inline std::vector<int> random_permutation(std::size_t n, Xoshiro256PlusPlus& rng) {
    std::vector<int> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = static_cast<int>(i);
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(sigma[i - 1], sigma[j]);
    }
    return sigma;
}

}  // namespace birkhoff
