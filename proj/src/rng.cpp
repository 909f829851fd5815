#include "ineq/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace ineq {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kSeedSalt = 0x6A09E667F3BCC909ULL;
constexpr std::uint64_t kSplitSalt = 0xBB67AE8584CAA73BULL;
constexpr std::uint64_t kKeySalt = 0x3C6EF372FE94F82BULL;

}  // namespace

std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

std::uint64_t stream_key(std::initializer_list<std::uint64_t> words) noexcept {
    std::uint64_t h = kKeySalt;
    for (std::uint64_t w : words) {
        h = mix64((h + kGolden) ^ mix64(w));
    }
    return h;
}

DistSpec::DistSpec(double shape_in, double scale_in) : shape(shape_in), scale(scale_in) {
    if (!(shape > 0.0) || !std::isfinite(shape) || !(scale > 0.0) || !std::isfinite(scale)) {
        throw std::domain_error("DistSpec: shape and scale must be positive and finite");
    }
}

Rng::Rng(std::uint64_t seed) noexcept : seed_(seed), base_(mix64(seed ^ kSeedSalt)) {}

Rng Rng::split(std::uint64_t stream_index) const noexcept {
    return Rng(mix64(mix64(seed_ ^ kSplitSalt) + mix64(stream_index + kGolden)));
}

std::uint64_t Rng::next_u64() noexcept {
    counter_ += 1;
    return mix64(base_ + counter_ * kGolden);
}

double Rng::next_uniform() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t Rng::next_below(std::uint64_t bound) noexcept {
    // Rejection against the largest multiple of bound, so the result is
    // exactly uniform.
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold) {
            return r % bound;
        }
    }
}

double Rng::next_normal() noexcept {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    constexpr double kTwoPi = 6.283185307179586;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double Rng::next_gamma(const DistSpec& spec) noexcept {
    const double alpha = spec.shape;
    if (alpha < 1.0) {
        const DistSpec boosted(alpha + 1.0, spec.scale);
        return next_gamma(boosted) * std::pow(next_uniform(), 1.0 / alpha);
    }
    const double d = alpha - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = next_uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            return d * v * spec.scale;
        }
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            return d * v * spec.scale;
        }
    }
}

std::vector<double> Rng::sample_gamma(const DistSpec& spec, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("sample_gamma: n must be at least 1");
    }
    std::vector<double> out(n);
    for (double& v : out) {
        v = next_gamma(spec);
    }
    return out;
}

}  // namespace ineq
