#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "mclab/errors.hpp"
#include "mclab/rng.hpp"
#include "mclab/stats.hpp"

using mclab::RngStream;
using mclab::SummaryStats;

namespace {

SummaryStats from(const std::vector<double>& xs) {
    SummaryStats s;
    for (double x : xs) s.accumulate(x);
    return s;
}

void check_close(const SummaryStats& a, const SummaryStats& b, double rel) {
    REQUIRE(a.count() == b.count());
    CHECK(a.mean() == doctest::Approx(b.mean()).epsilon(rel));
    CHECK(a.variance() == doctest::Approx(b.variance()).epsilon(rel));
    CHECK(a.skewness() == doctest::Approx(b.skewness()).epsilon(1e-6));
    CHECK(a.min() == b.min());
    CHECK(a.max() == b.max());
    CHECK(a.median() == doctest::Approx(b.median()).epsilon(rel));
}

}  // namespace

TEST_SUITE("stats") {

TEST_CASE("basic accumulation") {
    const SummaryStats s = from({1, 2, 3});
    CHECK(s.mean() == 2.0);
    CHECK(s.min() == 1.0);
    CHECK(s.max() == 3.0);
    CHECK(s.median() == 2.0);
}

TEST_CASE("symmetric sample has zero skewness") {
    const SummaryStats s = from({-1, 0, 1});
    CHECK(std::fabs(s.skewness()) < 1e-12);
    CHECK(s.median() == 0.0);
}

TEST_CASE("constant sample has zero variance") {
    const SummaryStats s = from({4.5, 4.5, 4.5, 4.5});
    CHECK(s.variance() == 0.0);
    CHECK(s.skewness() == 0.0);
}

TEST_CASE("median for even counts") {
    CHECK(from({1, 2, 3, 4}).median() == 2.5);
    CHECK(from({7, 1}).median() == 4.0);
}

TEST_CASE("merge equals concatenated accumulation") {
    const SummaryStats merged =
        SummaryStats::merge(from({1, 2}), from({3}));
    check_close(merged, from({1, 2, 3}), 1e-12);
}

TEST_CASE("merge with empty is identity") {
    const SummaryStats s = from({2, 4, 8});
    const SummaryStats left = SummaryStats::merge(SummaryStats{}, s);
    const SummaryStats right = SummaryStats::merge(s, SummaryStats{});
    check_close(left, s, 1e-15);
    check_close(right, s, 1e-15);
}

TEST_CASE("merge commutes on the moment fields") {
    const SummaryStats a = from({1, 5, 2, 8});
    const SummaryStats b = from({-3, 0.5});
    const SummaryStats ab = SummaryStats::merge(a, b);
    const SummaryStats ba = SummaryStats::merge(b, a);
    CHECK(ab.mean() == doctest::Approx(ba.mean()).epsilon(1e-12));
    CHECK(ab.variance() == doctest::Approx(ba.variance()).epsilon(1e-12));
    CHECK(ab.skewness() == doctest::Approx(ba.skewness()).epsilon(1e-12));
    CHECK(ab.median() == ba.median());
}

TEST_CASE("merge over randomized partitions matches sequential") {
    RngStream rng(21);
    std::vector<double> xs(10000);
    for (double& x : xs) x = rng.uniform(-10, 10);
    const SummaryStats whole = from(xs);

    for (int rep = 0; rep < 10; ++rep) {
        SummaryStats merged;
        std::size_t i = 0;
        while (i < xs.size()) {
            const std::size_t len = 1 + static_cast<std::size_t>(
                                            rng.uniform(0, 400));
            SummaryStats part;
            for (std::size_t j = i; j < std::min(i + len, xs.size()); ++j) {
                part.accumulate(xs[j]);
            }
            merged = SummaryStats::merge(merged, part);
            i += len;
        }
        check_close(merged, whole, 1e-9);
    }
}

TEST_CASE("variance matches a two-pass reference on 1e6 values") {
    RngStream rng(22);
    std::vector<double> xs(1000000);
    for (double& x : xs) x = rng.uniform(0, 1000);
    SummaryStats s;
    for (double x : xs) s.accumulate(x);

    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double m2 = 0.0;
    for (double x : xs) m2 += (x - mean) * (x - mean);
    const double two_pass = m2 / static_cast<double>(xs.size());

    CHECK(s.variance() == doctest::Approx(two_pass).epsilon(1e-9));
}

TEST_CASE("insufficient data errors") {
    SummaryStats s;
    CHECK_THROWS_AS(s.mean(), mclab::InsufficientDataError);
    CHECK_THROWS_AS(s.median(), mclab::InsufficientDataError);
    s.accumulate(1.0);
    CHECK_THROWS_AS(s.variance(), mclab::InsufficientDataError);
    s.accumulate(2.0);
    CHECK_THROWS_AS(s.skewness(), mclab::InsufficientDataError);
    CHECK_THROWS_AS(s.finalize(), mclab::InsufficientDataError);
    s.accumulate(3.0);
    CHECK_NOTHROW(s.finalize());
}

TEST_CASE("non-finite input is rejected") {
    SummaryStats s;
    CHECK_THROWS_AS(s.accumulate(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(s.accumulate(INFINITY), std::invalid_argument);
    CHECK(s.count() == 0);
}

TEST_CASE("uniform angle variance matches pi^2/3") {
    // Variance of theta ~ U(-pi, pi] is pi^2/3 ~ 3.29.
    RngStream rng(23);
    SummaryStats s;
    for (int i = 0; i < 175000; ++i) {
        s.accumulate(rng.uniform(-std::numbers::pi, std::numbers::pi));
    }
    CHECK(std::fabs(s.variance() - 3.29) < 0.03);
}

TEST_CASE("half-normal sample mean and median") {
    RngStream rng(24);
    SummaryStats s;
    for (int i = 0; i < 175000; ++i) {
        s.accumulate(std::fabs(rng.normal()));
    }
    CHECK(std::fabs(s.mean() - std::sqrt(2.0 / std::numbers::pi)) < 0.005);
    CHECK(std::fabs(s.median() - 0.6744897501960817) < 0.01);
    CHECK(s.skewness() > 0.0);
}

}  // TEST_SUITE
