#include "mclab/rng.hpp"

#include <cmath>
#include <numbers>

namespace mclab {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// splitmix64 output function (Steele, Lea, Flood).
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t splitmix_next(std::uint64_t& state) {
    state += kGolden;
    return mix64(state);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) : key_(seed) {
    seed_state();
}

void RngStream::seed_state() {
    std::uint64_t s = key_;
    for (auto& word : s_) word = splitmix_next(s);
    // xoshiro forbids the all-zero state; unreachable for splitmix output
    // in practice, but cheap to rule out.
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = kGolden;
}

RngStream RngStream::substream(std::uint64_t index) const {
    // Child keys are consecutive splitmix64 outputs of a stream seeded at
    // this key, indexed by `index`.
    RngStream child;
    child.key_ = mix64(key_ + kGolden * (index + 1));
    child.seed_state();
    return child;
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
    return lo + next_double() * (hi - lo);
}

double RngStream::normal() {
    // u1 in (0, 1] keeps the log finite.
    const double u1 = 1.0 - next_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace mclab
