#pragma once

#include <stdexcept>

namespace mclab {

// Thrown by side_lengths when the vertices are (near-)collinear.
struct DegenerateTriangleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a rejection sampler exceeds its retry cap; signals a broken
// region definition rather than bad luck.
struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid experiment configuration (unknown method, zero trials, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A statistic was requested from an accumulator with too few observations.
struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mclab
