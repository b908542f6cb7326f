#pragma once

#include <cstdint>

namespace mclab {

/// Seedable deterministic random stream, splittable into independent
/// substreams.
///
/// The stream identity is a 64-bit key. substream(i) derives a child key
/// from (key, i) through a splitmix64 step, so any path of indices below a
/// root seed names the same sequence on every platform and in every run.
/// The generator core is xoshiro256++ seeded by expanding the key.
///
/// A stream is single-owner: never share one instance between concurrent
/// workers. Parallel code takes one substream per work chunk instead.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    /// Independent reproducible child stream for the given index.
    RngStream substream(std::uint64_t index) const;

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// Standard normal deviate (Box-Muller; deterministic across platforms,
    /// unlike std::normal_distribution).
    double normal();

    std::uint64_t key() const { return key_; }

private:
    RngStream() = default;
    void seed_state();

    std::uint64_t key_ = 0;
    std::uint64_t s_[4] = {0, 0, 0, 0};
};

}  // namespace mclab
