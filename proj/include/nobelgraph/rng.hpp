#pragma once
// Deterministic RNG utilities. std::uniform_int_distribution is not pinned
// across standard library implementations, so bounded sampling and shuffling
// are hand-rolled on top of splitmix64 streams.

#include <cstdint>
#include <vector>

namespace nobelgraph {

class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t operator()() { return next(); }

    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ull; }

    // Unbiased integer in [0, bound) via rejection sampling.
    std::uint64_t bounded(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t threshold = (~bound + 1) % bound; // 2^64 mod bound
        while (true) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    SplitMix64 g(a ^ (b + 0x9E3779B97F4A7C15ull + (a << 6) + (a >> 2)));
    return g.next();
}

// Independent per-item stream, e.g. (run seed, item index).
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix_seed(seed, index));
}

template <typename T>
inline void shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.bounded(i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace nobelgraph
