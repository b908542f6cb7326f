#include "mclab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mclab/errors.hpp"

namespace mclab {

void SummaryStats::accumulate(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("SummaryStats: non-finite value");
    }
    const std::uint64_t n1 = n_;
    n_ += 1;
    const double delta = x - mean_;
    const double delta_n = delta / static_cast<double>(n_);
    const double term1 = delta * delta_n * static_cast<double>(n1);
    mean_ += delta_n;
    m3_ += term1 * delta_n * static_cast<double>(n_ - 2) - 3.0 * delta_n * m2_;
    m2_ += term1;
    if (n_ == 1) {
        min_ = max_ = x;
    } else {
        min_ = std::min(min_, x);
        max_ = std::max(max_, x);
    }
    values_.push_back(x);
}

void SummaryStats::merge_from(const SummaryStats& other) {
    if (other.n_ == 0) return;
    if (n_ == 0) {
        *this = other;
        return;
    }
    const double na = static_cast<double>(n_);
    const double nb = static_cast<double>(other.n_);
    const double n = na + nb;
    const double delta = other.mean_ - mean_;

    m3_ = m3_ + other.m3_ +
          delta * delta * delta * na * nb * (na - nb) / (n * n) +
          3.0 * delta * (na * other.m2_ - nb * m2_) / n;
    m2_ = m2_ + other.m2_ + delta * delta * na * nb / n;
    mean_ = mean_ + delta * nb / n;
    n_ += other.n_;
    min_ = std::min(min_, other.min_);
    max_ = std::max(max_, other.max_);
    values_.insert(values_.end(), other.values_.begin(), other.values_.end());
}

SummaryStats SummaryStats::merge(const SummaryStats& a, const SummaryStats& b) {
    SummaryStats out = a;
    out.merge_from(b);
    return out;
}

double SummaryStats::mean() const {
    if (n_ < 1) throw InsufficientDataError("mean: empty accumulator");
    return mean_;
}

double SummaryStats::min() const {
    if (n_ < 1) throw InsufficientDataError("min: empty accumulator");
    return min_;
}

double SummaryStats::max() const {
    if (n_ < 1) throw InsufficientDataError("max: empty accumulator");
    return max_;
}

double SummaryStats::median() const {
    if (n_ < 1) throw InsufficientDataError("median: empty accumulator");
    std::vector<double> v = values_;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    if (v.size() % 2 == 1) return v[mid];
    const double hi = v[mid];
    const double lo = *std::max_element(v.begin(), v.begin() + mid);
    return 0.5 * (lo + hi);
}

double SummaryStats::variance() const {
    if (n_ < 2) throw InsufficientDataError("variance: need >= 2 values");
    return m2_ / static_cast<double>(n_);
}

double SummaryStats::skewness() const {
    if (n_ < 3) throw InsufficientDataError("skewness: need >= 3 values");
    const double var = m2_ / static_cast<double>(n_);
    if (var <= 0.0) return 0.0;
    return (m3_ / static_cast<double>(n_)) / std::pow(var, 1.5);
}

SummaryStats::Summary SummaryStats::finalize() const {
    if (n_ < 3) throw InsufficientDataError("finalize: need >= 3 values");
    return {mean(), median(), min(), max(), variance(), skewness(), n_};
}

}  // namespace mclab
