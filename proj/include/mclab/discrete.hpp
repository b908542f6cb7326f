#pragma once

#include <cstdint>

#include "mclab/rng.hpp"

namespace mclab::discrete {

/// How the statement "at least one is a boy" came about: either families
/// without a boy were filtered out of the sample space, or an informant
/// reported the sex of one child picked at random.
enum class TwoBoysProtocol { filter_families, informant };

enum class PrisonerStrategy { stay, switch_ };

/// Exact probability as a reduced fraction; keeps 1/3 and 2/3 lossless on
/// the oracle path.
struct Rational {
    long long num = 0;
    long long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

enum class Family : int { bb = 0, bg = 1, gb = 2, gg = 3 };

bool has_boy(Family f);
bool both_boys(Family f);

enum class Prisoner : int { a = 0, b = 1, c = 2 };

/// The warden's protocol: name an executed prisoner other than A, flipping
/// a coin only when A is the one pardoned.
Prisoner warden_names(Prisoner pardoned, bool coin_heads);

double two_boys(TwoBoysProtocol protocol, std::uint64_t trials, RngStream& rng);

double three_prisoners(PrisonerStrategy strategy, std::uint64_t trials,
                       RngStream& rng);

/// Raw counts behind two_boys. Under filter_families, `kept` counts only
/// the families with at least one boy; the estimate is hits/kept.
struct TwoBoysBatch {
    std::uint64_t hits = 0;
    std::uint64_t kept = 0;
    std::uint64_t trials = 0;
};

TwoBoysBatch run_two_boys_batch(TwoBoysProtocol protocol, std::uint64_t trials,
                                RngStream& rng);

/// Stay and switch outcomes of one shared batch; stay_wins + switch_wins is
/// exactly `trials` because the two strategies are complementary per trial.
struct PrisonerBatch {
    std::uint64_t stay_wins = 0;
    std::uint64_t switch_wins = 0;
    std::uint64_t trials = 0;
};

PrisonerBatch run_prisoner_batch(std::uint64_t trials, RngStream& rng);

Rational exact_value(TwoBoysProtocol protocol);
Rational exact_value(PrisonerStrategy strategy);

}  // namespace mclab::discrete
