#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "mclab/geometry.hpp"
#include "mclab/rng.hpp"

namespace mclab::samplers {

/// Triangle randomization families. ellipse/rectangle carry an aspect
/// parameter and cover three table rows each.
enum class Method {
    generated,      // big angle swept over [pi/3, pi], anchored in the unit disk
    polar_uniform,  // uniform theta, uniform rho in [0,1] per vertex
    half_normal,    // uniform theta, rho = |standard normal| per vertex
    ellipse,        // area-uniform in an ellipse via the sqrt-radius transform
    rectangle,      // cartesian-uniform in a centered rectangle
    fractal,        // per coordinate: sum of depth scaled uniform levels
    quotient,       // rho = u/v with u ~ U[0,1], v ~ U[lo,hi]; uniform theta
    l_method,       // free vertex of a unit longest side, rejected to its region
    m_method,       // free vertex of a unit medium side
};

/// The m_method region can be filled area-uniformly (rejection sampling,
/// the default) or by the (theta, rho)-uniform recipe, which weights the
/// same region differently.
enum class MVariant { area_uniform, paper };

struct SamplerSpec {
    Method method = Method::polar_uniform;
    double aspect_a = 1.0;  // y extent (minor); a:b in {1:1, 1:2, 1:3}
    double aspect_b = 1.0;  // x extent (major)
    int fractal_depth = 8;
    double quotient_lo = 0.09;
    double quotient_hi = 1.4;
    MVariant m_variant = MVariant::area_uniform;
};

/// One sampled triangle plus the polar observations recorded for the trial:
/// all three vertices for most methods, only the varying vertex for
/// l_method/m_method (their table rows describe a single vertex's region).
struct SampleOutcome {
    Triangle triangle;
    std::array<PolarPoint, 3> vertex_polar{};
    int polar_count = 0;
    std::uint64_t rejections = 0;

    std::span<const PolarPoint> polars() const {
        return {vertex_polar.data(), static_cast<std::size_t>(polar_count)};
    }
};

/// Consecutive-rejection cap; exceeding it means a region definition is
/// broken, not bad luck.
inline constexpr std::uint64_t kRejectionCap = 1'000'000;

/// Draw one non-degenerate triangle. trial_index/trial_count drive the
/// deterministic sweep of the generated method and are ignored elsewhere;
/// degenerate draws are resampled with `rejections` incremented.
/// Throws NonConvergenceError past kRejectionCap.
SampleOutcome sample(const SamplerSpec& spec, RngStream& rng,
                     std::uint64_t trial_index, std::uint64_t trial_count);

}  // namespace mclab::samplers
