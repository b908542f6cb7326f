#pragma once

#include <cstdint>
#include <vector>

namespace mclab {

/// Streaming summary statistics: single-pass central moments for mean,
/// variance and skewness, tracked min/max, and an exact median from a
/// retained sample buffer (desk scale, up to a few 10^7 observations).
///
/// An accumulator is single-writer. Cross-worker aggregation goes through
/// merge(), which is associative and equivalent (to ~1e-9 relative) to
/// accumulating the concatenated sequence.
class SummaryStats {
public:
    void accumulate(double x);  // throws std::invalid_argument on non-finite

    static SummaryStats merge(const SummaryStats& a, const SummaryStats& b);

    /// In-place merge; avoids recopying the retained buffer when reducing a
    /// long chunk sequence.
    void merge_from(const SummaryStats& other);

    std::uint64_t count() const { return n_; }

    double mean() const;      // count >= 1
    double min() const;       // count >= 1
    double max() const;       // count >= 1
    double median() const;    // count >= 1, exact
    double variance() const;  // count >= 2, population (m2/n)
    double skewness() const;  // count >= 3, standardized g1

    struct Summary {
        double mean, median, min, max, variance, skewness;
        std::uint64_t count;
    };

    /// All six statistics at once; requires count >= 3.
    Summary finalize() const;

private:
    std::uint64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
    double m3_ = 0.0;
    double min_ = 0.0;
    double max_ = 0.0;
    std::vector<double> values_;
};

}  // namespace mclab
