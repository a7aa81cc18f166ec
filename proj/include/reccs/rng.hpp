#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace reccs {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace detail

/// Seeded random stream with cheap named sub-streams. Identical
/// (seed, stream, call sequence) always yields identical outputs;
/// sub-stream derivation depends only on (seed, stream), never on
/// how many values have been drawn.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed),
          stream_(stream),
          eng_(detail::splitmix64(detail::splitmix64(seed) ^ stream)) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    RngStream substream(std::uint64_t id) const {
        return RngStream(seed_, detail::splitmix64(stream_ ^ detail::splitmix64(id)));
    }

    RngStream substream(std::string_view name) const {
        return substream(detail::fnv1a(name));
    }

    RngStream substream(std::uint64_t a, std::uint64_t b) const {
        return substream(detail::splitmix64(a) ^ b);
    }

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [0, n). Rejection sampling, so the result does
    /// not depend on the platform's distribution implementation.
    std::uint64_t uniform(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform double in [0, 1).
    double uniform_real() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform(i)]);
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 eng_;
};

/// Walker/Vose alias table for O(1) categorical sampling from integer
/// weights. Construction order is deterministic.
class AliasTable {
public:
    explicit AliasTable(std::span<const std::uint64_t> weights);

    bool empty() const { return prob_.empty(); }
    std::size_t size() const { return prob_.size(); }

    std::uint32_t sample(RngStream& rng) const;

private:
    std::vector<double> prob_;
    std::vector<std::uint32_t> alias_;
};

}  // namespace reccs
