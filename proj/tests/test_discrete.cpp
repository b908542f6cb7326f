#include <doctest.h>

#include <cmath>
#include <initializer_list>

#include "mclab/discrete.hpp"
#include "mclab/rng.hpp"

using namespace mclab;
using namespace mclab::discrete;

TEST_SUITE("discrete") {

TEST_CASE("exact values") {
    CHECK(exact_value(TwoBoysProtocol::filter_families) == Rational{1, 3});
    CHECK(exact_value(TwoBoysProtocol::informant) == Rational{1, 2});
    CHECK(exact_value(PrisonerStrategy::stay) == Rational{1, 3});
    CHECK(exact_value(PrisonerStrategy::switch_) == Rational{2, 3});

    // stay and switch are complementary: 1/3 + 2/3 = 1 in exact arithmetic
    const Rational stay = exact_value(PrisonerStrategy::stay);
    const Rational sw = exact_value(PrisonerStrategy::switch_);
    CHECK(stay.num * sw.den + sw.num * stay.den == stay.den * sw.den);
}

TEST_CASE("family atoms") {
    CHECK(has_boy(Family::bb));
    CHECK(has_boy(Family::bg));
    CHECK(has_boy(Family::gb));
    CHECK_FALSE(has_boy(Family::gg));
    CHECK(both_boys(Family::bb));
    CHECK_FALSE(both_boys(Family::bg));
}

TEST_CASE("two-boys enumeration oracle") {
    // Filtered sample space: the four equiprobable families minus GG leave
    // three cases, one of which is BB.
    int kept = 0, hits = 0;
    for (Family f : {Family::bb, Family::bg, Family::gb, Family::gg}) {
        if (!has_boy(f)) continue;
        ++kept;
        if (both_boys(f)) ++hits;
    }
    CHECK(kept == 3);
    CHECK(hits == 1);
    CHECK(Rational{hits, kept} == exact_value(TwoBoysProtocol::filter_families));

    // Informant: 4 families x 2 child picks, success when both children
    // share the named sex.
    int outcomes = 0, matches = 0;
    for (Family f : {Family::bb, Family::bg, Family::gb, Family::gg}) {
        for (int pick = 0; pick < 2; ++pick) {
            ++outcomes;
            const bool named_boy =
                pick == 0 ? (f == Family::bb || f == Family::bg)
                          : (f == Family::bb || f == Family::gb);
            if (named_boy ? f == Family::bb : f == Family::gg) ++matches;
        }
    }
    CHECK(outcomes == 8);
    CHECK(matches == 4);
    CHECK(Rational{1, 2} == exact_value(TwoBoysProtocol::informant));
}

TEST_CASE("warden protocol") {
    CHECK(warden_names(Prisoner::a, true) == Prisoner::b);
    CHECK(warden_names(Prisoner::a, false) == Prisoner::c);
    CHECK(warden_names(Prisoner::b, true) == Prisoner::c);
    CHECK(warden_names(Prisoner::b, false) == Prisoner::c);
    CHECK(warden_names(Prisoner::c, true) == Prisoner::b);
    CHECK(warden_names(Prisoner::c, false) == Prisoner::b);
}

TEST_CASE("prisoners enumeration oracle") {
    // Six equiprobable (pardon, coin) outcomes.
    int stay_wins = 0, switch_wins = 0, named_b = 0, named_b_and_c_pardoned = 0,
        named_b_and_a_pardoned = 0;
    for (Prisoner pardoned : {Prisoner::a, Prisoner::b, Prisoner::c}) {
        for (bool coin : {true, false}) {
            const Prisoner named = warden_names(pardoned, coin);
            CHECK(named != Prisoner::a);
            CHECK(named != pardoned);
            const Prisoner other =
                named == Prisoner::b ? Prisoner::c : Prisoner::b;
            if (pardoned == Prisoner::a) ++stay_wins;
            if (pardoned == other) ++switch_wins;
            if (named == Prisoner::b) {
                ++named_b;
                if (pardoned == Prisoner::c) ++named_b_and_c_pardoned;
                if (pardoned == Prisoner::a) ++named_b_and_a_pardoned;
            }
        }
    }
    CHECK(stay_wins == 2);    // 2/6 = 1/3
    CHECK(switch_wins == 4);  // 4/6 = 2/3
    CHECK(stay_wins + switch_wins == 6);

    // conditional on the warden naming B: pardon is A with 1/3, C with 2/3
    CHECK(named_b == 3);
    CHECK(named_b_and_a_pardoned == 1);
    CHECK(named_b_and_c_pardoned == 2);
}

TEST_CASE("stay and switch split one batch exactly") {
    RngStream rng(61);
    const PrisonerBatch batch = run_prisoner_batch(50000, rng);
    CHECK(batch.stay_wins + batch.switch_wins == batch.trials);

    // replaying the same seed gives complementary estimates summing to 1
    RngStream r1(62), r2(62);
    const double stay = three_prisoners(PrisonerStrategy::stay, 10000, r1);
    const double sw = three_prisoners(PrisonerStrategy::switch_, 10000, r2);
    CHECK(stay + sw == 1.0);
}

TEST_CASE("monte carlo matches the exact values") {
    const int n = 200000;
    auto band = [&](double p, double m) {
        return 4.0 * std::sqrt(p * (1 - p) / m);
    };

    RngStream r1(63);
    const double filter = two_boys(TwoBoysProtocol::filter_families, n, r1);
    // the filtered denominator is about 3n/4
    CHECK(std::fabs(filter - 1.0 / 3.0) < band(1.0 / 3.0, 0.75 * n));

    RngStream r2(64);
    const double informant = two_boys(TwoBoysProtocol::informant, n, r2);
    CHECK(std::fabs(informant - 0.5) < band(0.5, n));

    RngStream r3(65);
    const double stay = three_prisoners(PrisonerStrategy::stay, n, r3);
    CHECK(std::fabs(stay - 1.0 / 3.0) < band(1.0 / 3.0, n));

    RngStream r4(66);
    const double sw = three_prisoners(PrisonerStrategy::switch_, n, r4);
    CHECK(std::fabs(sw - 2.0 / 3.0) < band(2.0 / 3.0, n));
}

}  // TEST_SUITE
