#ifndef EK_RANDOM_HPP
#define EK_RANDOM_HPP

#include <cstdint>

namespace ek {

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
/// return z ^ (z >> 31).
class SplitMix64 {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state_ += kGamma);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman, Vigna 2018).
class Xoshiro256StarStar {
public:
    /// State words are the next four SplitMix64 outputs of seeder.
    explicit constexpr Xoshiro256StarStar(SplitMix64& seeder)
        : s_{seeder.next(), seeder.next(), seeder.next(), seeder.next()} {}

    /// Stream for chunk c of a run seeded with seed: the state is SplitMix64
    /// outputs 4c .. 4c+3 of the sequence started at seed, so consecutive
    /// chunks consume consecutive, non-overlapping seeding words.
    static constexpr Xoshiro256StarStar for_chunk(std::uint64_t seed, std::uint64_t chunk) {
        SplitMix64 seeder(seed + 4 * chunk * SplitMix64::kGamma);
        return Xoshiro256StarStar(seeder);
    }

    constexpr std::uint64_t next() {
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

    /// Uniform on [0, 1): (word >> 11) * 2^-53.
    constexpr double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
};

}  // namespace ek

#endif  // EK_RANDOM_HPP
