#pragma once

#include <cstdint>
#include <cmath>
#include <concepts>
#include <random>

namespace hawkfs {

// splitmix64 finalizer; used both as a bit mixer for seed derivation and
// to decorrelate raw user seeds before they reach the engine.
inline std::uint64_t mix_bits(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic substream derivation: every parallel unit of work (hawk,
// client, run, candidate) owns an Rng seeded from the master seed plus its
// coordinates, so results never depend on thread schedule.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a) {
    return mix_bits(base ^ mix_bits(a));
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    return derive_seed(derive_seed(base, a), b);
}

// FNV-1a over raw bytes; stable across platforms, used to hash decoded
// solutions into per-candidate seeds.
inline std::uint64_t fnv1a(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Random stream with explicitly coded distributions. mt19937_64 output is
// pinned by the standard; the transforms below avoid std::*_distribution,
// whose results vary between standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(mix_bits(seed)) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1), 53-bit resolution
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // unbiased integer in [0, n) by rejection
    std::uint64_t uniform_int(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
        std::uint64_t x = gen_();
        while (x > limit) x = gen_();
        return x % n;
    }

    // standard normal via Box-Muller; one normal per uniform pair keeps the
    // stream position a pure function of the call count
    double normal() {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    std::mt19937_64 gen_;
};

template <class R>
concept UniformRng = requires(R r, std::uint64_t n) {
    { r.uniform() } -> std::convertible_to<double>;
    { r.uniform_int(n) } -> std::convertible_to<std::uint64_t>;
    { r.normal() } -> std::convertible_to<double>;
};

}  // namespace hawkfs
