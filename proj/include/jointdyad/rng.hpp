#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>

namespace jointdyad {

// splitmix64 step; used for seeding, substream derivation and the
// stateless per-dyad draws of the sampler.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Top 53 bits -> [0, 1).
inline double u64_to_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Uniform in [0,1) keyed by (seed, a, b). Stateless, so serial and
// parallel traversals of the same key set see identical values.
inline double keyed_unit(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = seed;
    std::uint64_t h = splitmix64(s);
    s ^= h ^ (a * 0x9e3779b97f4a7c15ULL);
    h = splitmix64(s);
    s ^= h ^ (b * 0xbf58476d1ce4e5b9ULL);
    return u64_to_unit(splitmix64(s));
}

// Deterministic seeded stream (xoshiro256++ seeded via splitmix64) with
// named substream derivation. All distributions are generated from raw
// 64-bit draws only, so sequences are stable across platforms.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) word = splitmix64(s);
    }

    // Independent stream identified by (original seed, tag).
    RngStream child(std::uint64_t tag) const {
        std::uint64_t s = seed_;
        std::uint64_t h = splitmix64(s);
        s ^= h ^ (tag * 0x94d049bb133111ebULL);
        return RngStream(splitmix64(s));
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
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

    double unit() { return u64_to_unit(next_u64()); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("below(0)");
        const std::uint64_t threshold = -n % n;
        for (;;) {
            std::uint64_t x = next_u64();
            if (x >= threshold) return x % n;
        }
    }

    // Standard normal via Marsaglia's polar method.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double x, y, s;
        do {
            x = 2.0 * unit() - 1.0;
            y = 2.0 * unit() - 1.0;
            s = x * x + y * y;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = y * f;
        has_spare_ = true;
        return x * f;
    }

    // Gamma(shape, 1) via Marsaglia-Tsang, with the shape < 1 boost.
    double gamma(double shape) {
        if (!(shape > 0.0)) throw std::invalid_argument("gamma shape must be > 0");
        if (shape < 1.0) {
            const double u = unit();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = unit();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    // Symmetric Dirichlet(alpha) over out.size() cells.
    void dirichlet(double alpha, std::span<double> out) {
        double total = 0.0;
        for (auto& x : out) {
            x = gamma(alpha);
            total += x;
        }
        if (total <= 0.0) {
            // All gamma draws underflowed; fall back to the uniform row.
            for (auto& x : out) x = 1.0 / static_cast<double>(out.size());
            return;
        }
        for (auto& x : out) x /= total;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t seed_ = 0;
    std::uint64_t state_[4] = {};
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace jointdyad
