#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace rsiplan {

// Deterministic splitmix64 stream. Solver results must be bit-reproducible
// from (inputs, seed) on every platform, so no std::uniform_*_distribution
// anywhere in the library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool next_bool() { return (next_u64() >> 63) != 0; }

    // unbiased uniform in [0, n)
    std::uint64_t next_below(std::uint64_t n) {
        if (n < 2) return 0;
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    template <class T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[next_below(i)]);
        }
    }

private:
    std::uint64_t state_;
};

// splitmix64 finalizer, used to scramble seed material
inline std::uint64_t hash_mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

// Derives an independent child seed, e.g. per read, per branch, per round.
inline std::uint64_t combine_seed(std::uint64_t seed, std::uint64_t salt) {
    return hash_mix(seed + 0x9e3779b97f4a7c15ull * (salt + 1));
}

inline std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace rsiplan
