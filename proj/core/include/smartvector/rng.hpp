#pragma once
// Deterministic randomness helpers. std::mt19937_64 is bit-pinned by the
// standard, but the <random> distributions and std::shuffle are not, so
// bounded draws and shuffles are implemented here to keep generated
// corpora byte-identical across toolchains.

#include <cstdint>
#include <random>
#include <vector>

namespace smartvector {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stateless per-entity draw: hash of (seed, tag, index). The benchmark
// generator uses these so per-topic values do not depend on how many
// other topics consumed the stream (rate sweeps keep topics identical).
inline std::uint64_t mix(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    return splitmix64(splitmix64(seed ^ (tag * 0x9e3779b97f4a7c15ULL)) ^ index);
}

// Uniform integer in [lo, hi] from a single hash value (rejection-free
// 128-bit multiply; bias is < 2^-64, irrelevant at benchmark scale but
// deterministic, which is what matters).
inline std::int64_t bounded(std::uint64_t h, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const unsigned __int128 wide = static_cast<unsigned __int128>(h) * range;
    return lo + static_cast<std::int64_t>(wide >> 64);
}

inline std::int64_t mix_int(std::uint64_t seed, std::uint64_t tag, std::uint64_t index,
                            std::int64_t lo, std::int64_t hi) {
    return bounded(mix(seed, tag, index), lo, hi);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    std::uint64_t u64() { return eng_(); }

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return bounded(u64(), lo, hi);
    }

    // Fisher-Yates with our own bounded draw.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(int_in(0, static_cast<std::int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace smartvector
