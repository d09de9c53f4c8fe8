#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace wsar {

// Deterministic counter-friendly generator (splitmix64). Streams derived
// from (seed, label) or (seed, counter) are independent of worker count and
// platform, which the reproducibility contract of the toolkit relies on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on (0, 1].
    double uniform_pos() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }

    // Uniform on [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Circular complex gaussian with E|z|^2 = sigma^2.
    std::complex<double> complex_gaussian(double sigma) {
        const double s = sigma * std::numbers::sqrt2 / 2.0;
        const double re = gaussian();
        const double im = gaussian();
        return {s * re, s * im};
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter) {
    // One splitmix step over the combined value decorrelates the streams.
    std::uint64_t z = seed ^ (counter * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Label-derived subsystem seed (FNV-1a over the label, mixed with the seed).
inline std::uint64_t labeled_seed(std::uint64_t seed, std::string_view label) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const char c : label) {
        h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
        h *= 0x100000001B3ULL;
    }
    return mix_seed(seed, h);
}

}  // namespace wsar
