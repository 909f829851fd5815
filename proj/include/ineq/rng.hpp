#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ineq {

/// SplitMix64 finalizer; the mixing primitive behind Rng and stream keys.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// Order-sensitive fold of 64-bit words into a stream key.
/// Used to derive reproducible substream indices from structured tuples.
std::uint64_t stream_key(std::initializer_list<std::uint64_t> words) noexcept;

/// Gamma(shape, scale) specification with mean shape*scale.
struct DistSpec {
    double shape;
    double scale;

    DistSpec(double shape_in, double scale_in);
    double mean() const noexcept { return shape * scale; }
};

/// Deterministic counter-based generator with splittable substreams.
///
/// The output sequence is a pure function of the seed; children produced
/// by split() are pure functions of (seed, stream_index), so parallel
/// consumers can be given independent reproducible streams regardless of
/// scheduling order.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) noexcept;

    /// Child stream derived from the parent's seed and an index; does not
    /// advance or depend on this generator's position.
    Rng split(std::uint64_t stream_index) const noexcept;

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() noexcept;

    /// Uniform draw strictly inside (0, 1).
    double next_uniform() noexcept;

    /// Unbiased uniform integer in [0, bound); bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) noexcept;

    /// Standard normal via Box-Muller.
    double next_normal() noexcept;

    /// One Gamma(shape, scale) draw via Marsaglia-Tsang (with the
    /// shape < 1 boosting transform). Always positive.
    double next_gamma(const DistSpec& spec) noexcept;

    /// n i.i.d. Gamma(shape, scale) draws.
    std::vector<double> sample_gamma(const DistSpec& spec, std::size_t n);

  private:
    std::uint64_t seed_;
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

}  // namespace ineq
