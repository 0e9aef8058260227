#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace seams {

// Reproducibility contract: every random quantity in this library is a pure
// function of a 64-bit seed. The generator is std::mt19937_64 (bit-exact
// across standard library implementations); bounded draws, unit doubles and
// shuffles are implemented here rather than with <random> distributions,
// whose output is implementation-defined. Golden files depend on this.

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent child seed for realization/painting index `index` of a run
// seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound) by rejection from the high bits; unbiased
    // and portable.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0ULL - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // One pixel draw: channels from the low three bytes of a single output.
    void rgb_bytes(std::uint8_t& r, std::uint8_t& g, std::uint8_t& b) {
        const std::uint64_t v = engine_();
        r = static_cast<std::uint8_t>(v & 0xFF);
        g = static_cast<std::uint8_t>((v >> 8) & 0xFF);
        b = static_cast<std::uint8_t>((v >> 16) & 0xFF);
    }

    // Fisher-Yates, descending, using below(); not std::shuffle, which is
    // implementation-defined.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace seams
