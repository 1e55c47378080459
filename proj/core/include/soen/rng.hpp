#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace soen {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// A draw is a pure function of (key, counter), so streams can be split by
// entity id and event index and evaluated in any order, which is what makes
// parallel runs bit-identical to serial ones.
class Philox {
  public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter round10(Counter ctr, Key key) {
        for (int r = 0; r < 10; ++r) {
            ctr = single_round(ctr, key);
            key[0] += 0x9E3779B9u; // golden-ratio Weyl increments
            key[1] += 0xBB67AE85u;
        }
        return ctr;
    }

  private:
    static std::uint32_t mulhi(std::uint32_t a, std::uint32_t b) {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) >> 32);
    }
    static Counter single_round(const Counter& c, const Key& k) {
        const std::uint32_t m0 = 0xD2511F53u, m1 = 0xCD9E8D57u;
        const std::uint32_t lo0 = m0 * c[0], hi0 = mulhi(m0, c[0]);
        const std::uint32_t lo1 = m1 * c[2], hi1 = mulhi(m1, c[2]);
        return Counter{hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }
};

// One logical random stream: (seed, purpose, entity) fixes the key, and each
// draw advances a 64-bit index. Thread-safe to copy; never shared mutable.
class RandomStream {
  public:
    RandomStream(std::uint64_t seed, std::uint32_t purpose, std::uint64_t entity)
        : seed_(seed), purpose_(purpose), entity_(entity) {}

    // Uniform in [0, 1). 53-bit resolution.
    double uniform() { return to_unit(next()); }

    double uniform_at(std::uint64_t index) const { return to_unit(block(index)); }

    // Exponential with given rate (inter-arrival sampling).
    double exponential(double rate) {
        double u = uniform();
        return -std::log1p(-u) / rate;
    }

    // Binomial(n, p) by inversion for small n, normal approximation for large.
    std::uint64_t binomial(std::uint64_t n, double p) {
        if (p <= 0.0 || n == 0) return 0;
        if (p >= 1.0) return n;
        if (n < 64) {
            std::uint64_t k = 0;
            for (std::uint64_t i = 0; i < n; ++i)
                if (uniform() < p) ++k;
            return k;
        }
        const double mean = static_cast<double>(n) * p;
        const double sd = std::sqrt(mean * (1.0 - p));
        double g = gaussian();
        double v = std::round(mean + sd * g);
        if (v < 0.0) v = 0.0;
        if (v > static_cast<double>(n)) v = static_cast<double>(n);
        return static_cast<std::uint64_t>(v);
    }

    double gaussian() {
        // Box-Muller on two independent draws.
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 5e-324;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTau * u2);
    }

    std::uint64_t index() const { return index_; }
    void set_index(std::uint64_t i) { index_ = i; }

    // Derive a child seed, used to give sweep points isolated streams.
    std::uint64_t derive_seed(std::uint64_t counter) const {
        const auto b = block_raw(counter ^ 0x5eed5eed5eed5eedull);
        return (static_cast<std::uint64_t>(b[0]) << 32) | b[1];
    }

  private:
    static constexpr double kTau = 6.283185307179586;

    std::uint64_t next() { return block(index_++); }

    std::uint64_t block(std::uint64_t index) const {
        const auto out = block_raw(index);
        return (static_cast<std::uint64_t>(out[2]) << 32) | out[3];
    }

    Philox::Counter block_raw(std::uint64_t index) const {
        Philox::Counter ctr{static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                            static_cast<std::uint32_t>(entity_), static_cast<std::uint32_t>(entity_ >> 32)};
        Philox::Key key{static_cast<std::uint32_t>(seed_ ^ purpose_),
                        static_cast<std::uint32_t>((seed_ >> 32) ^ (0x9E3779B9u * purpose_ + 1u))};
        return Philox::round10(ctr, key);
    }

    static double to_unit(std::uint64_t bits) {
        return static_cast<double>(bits >> 11) * 0x1.0p-53;
    }

    std::uint64_t seed_;
    std::uint32_t purpose_;
    std::uint64_t entity_;
    std::uint64_t index_ = 0;
};

// Stream purposes, kept in one place so ids never collide.
namespace rng_purpose {
inline constexpr std::uint32_t kDriveArrivals = 1;
inline constexpr std::uint32_t kEdgeThinning = 2;
inline constexpr std::uint32_t kDetection = 3;
inline constexpr std::uint32_t kLedEmission = 4;
inline constexpr std::uint32_t kRateSampling = 5;
inline constexpr std::uint32_t kTopology = 6;
inline constexpr std::uint32_t kSweep = 7;
} // namespace rng_purpose

} // namespace soen
