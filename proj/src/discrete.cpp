#include "mclab/discrete.hpp"

#include <stdexcept>

namespace mclab::discrete {

namespace {

Family draw_family(RngStream& rng) {
    const bool first_boy = rng.next_double() < 0.5;
    const bool second_boy = rng.next_double() < 0.5;
    if (first_boy && second_boy) return Family::bb;
    if (first_boy) return Family::bg;
    if (second_boy) return Family::gb;
    return Family::gg;
}

}  // namespace

bool has_boy(Family f) { return f != Family::gg; }

bool both_boys(Family f) { return f == Family::bb; }

Prisoner warden_names(Prisoner pardoned, bool coin_heads) {
    switch (pardoned) {
        case Prisoner::a: return coin_heads ? Prisoner::b : Prisoner::c;
        case Prisoner::b: return Prisoner::c;
        case Prisoner::c: return Prisoner::b;
    }
    throw std::domain_error("warden_names: bad prisoner");
}

TwoBoysBatch run_two_boys_batch(TwoBoysProtocol protocol, std::uint64_t trials,
                                RngStream& rng) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    TwoBoysBatch batch;
    batch.trials = trials;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const Family f = draw_family(rng);
        switch (protocol) {
            case TwoBoysProtocol::filter_families:
                if (!has_boy(f)) continue;
                ++batch.kept;
                if (both_boys(f)) ++batch.hits;
                break;
            case TwoBoysProtocol::informant: {
                ++batch.kept;
                const bool first_child = rng.next_double() < 0.5;
                const bool named_boy = first_child
                                           ? (f == Family::bb || f == Family::bg)
                                           : (f == Family::bb || f == Family::gb);
                const bool matches = named_boy ? both_boys(f) : f == Family::gg;
                if (matches) ++batch.hits;
                break;
            }
        }
    }
    return batch;
}

double two_boys(TwoBoysProtocol protocol, std::uint64_t trials, RngStream& rng) {
    const TwoBoysBatch batch = run_two_boys_batch(protocol, trials, rng);
    if (batch.kept == 0) return 0.0;
    return static_cast<double>(batch.hits) / static_cast<double>(batch.kept);
}

PrisonerBatch run_prisoner_batch(std::uint64_t trials, RngStream& rng) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    PrisonerBatch batch;
    batch.trials = trials;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const double u = rng.next_double();
        const Prisoner pardoned = u < 1.0 / 3.0   ? Prisoner::a
                                  : u < 2.0 / 3.0 ? Prisoner::b
                                                  : Prisoner::c;
        const bool coin = rng.next_double() < 0.5;
        const Prisoner named = warden_names(pardoned, coin);
        const Prisoner other =
            named == Prisoner::b ? Prisoner::c : Prisoner::b;
        if (pardoned == Prisoner::a) {
            ++batch.stay_wins;
        } else if (pardoned == other) {
            ++batch.switch_wins;
        }
    }
    return batch;
}

double three_prisoners(PrisonerStrategy strategy, std::uint64_t trials,
                       RngStream& rng) {
    const PrisonerBatch batch = run_prisoner_batch(trials, rng);
    const std::uint64_t wins = strategy == PrisonerStrategy::stay
                                   ? batch.stay_wins
                                   : batch.switch_wins;
    return static_cast<double>(wins) / static_cast<double>(batch.trials);
}

Rational exact_value(TwoBoysProtocol protocol) {
    switch (protocol) {
        case TwoBoysProtocol::filter_families: return {1, 3};
        case TwoBoysProtocol::informant: return {1, 2};
    }
    throw std::domain_error("exact_value: bad protocol");
}

Rational exact_value(PrisonerStrategy strategy) {
    switch (strategy) {
        case PrisonerStrategy::stay: return {1, 3};
        case PrisonerStrategy::switch_: return {2, 3};
    }
    throw std::domain_error("exact_value: bad strategy");
}

}  // namespace mclab::discrete
