#include "mclab/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mclab/analytic.hpp"
#include "mclab/errors.hpp"

namespace mclab::samplers {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void bump_rejections(std::uint64_t& rejections) {
    if (++rejections >= kRejectionCap) {
        throw NonConvergenceError("sample: rejection cap exceeded");
    }
}

Point2 polar_vertex(double rho, double theta) {
    return {rho * std::cos(theta), rho * std::sin(theta)};
}

struct Made {
    Triangle t;
    bool record_all = true;  // false: record only the varying vertex t.c
};

Made make_generated(RngStream& rng, std::uint64_t index, std::uint64_t count) {
    const double step = (2.0 * kPi / 3.0) / static_cast<double>(count);
    // Midpoint grid: the big angle never hits pi/2 exactly, and the obtuse
    // fraction is exactly 3/4 whenever count is divisible by 4.
    const double big = kPi / 3.0 + (static_cast<double>(index) + 0.5) * step;
    const double rem = kPi - big;

    // Uniform split of the remainder conditioned on neither part exceeding
    // the big angle; sampling the feasible window directly draws the same
    // law as rejecting oversized splits.
    const double lo = std::max(0.0, rem - big);
    const double hi = std::min(big, rem);
    const double ang_b = rng.uniform(lo, hi);
    const double ang_c = rem - ang_b;

    // Side a = 1 opposite the big angle; law of sines for the others.
    const double side_c = std::sin(ang_c) / std::sin(big);  // edge to vertex B
    const double side_b = std::sin(ang_b) / std::sin(big);  // edge to vertex C

    const double anchor_theta = rng.uniform(0.0, kTwoPi);
    const double anchor_rho = std::sqrt(rng.next_double());
    const Point2 pa = polar_vertex(anchor_rho, anchor_theta);

    const double spin = rng.uniform(0.0, kTwoPi);  // about the anchor vertex
    const Point2 pb{pa.x + side_c * std::cos(spin + big / 2.0),
                    pa.y + side_c * std::sin(spin + big / 2.0)};
    const Point2 pc{pa.x + side_b * std::cos(spin - big / 2.0),
                    pa.y + side_b * std::sin(spin - big / 2.0)};
    return {{pa, pb, pc}, true};
}

Made make_isotropic(const SamplerSpec& spec, RngStream& rng) {
    Point2 v[3];
    for (Point2& p : v) {
        const double theta = rng.uniform(0.0, kTwoPi);
        double rho = 0.0;
        switch (spec.method) {
            case Method::polar_uniform: rho = rng.next_double(); break;
            case Method::half_normal: rho = std::fabs(rng.normal()); break;
            case Method::quotient:
                rho = rng.next_double() /
                      rng.uniform(spec.quotient_lo, spec.quotient_hi);
                break;
            default:
                throw std::logic_error("make_isotropic: bad method");
        }
        p = polar_vertex(rho, theta);
    }
    return {{v[0], v[1], v[2]}, true};
}

Made make_ellipse(const SamplerSpec& spec, RngStream& rng) {
    Point2 v[3];
    for (Point2& p : v) {
        const double theta = rng.uniform(0.0, kTwoPi);
        const double r = std::sqrt(rng.next_double());
        p = {spec.aspect_b * r * std::cos(theta),
             spec.aspect_a * r * std::sin(theta)};
    }
    return {{v[0], v[1], v[2]}, true};
}

Made make_rectangle(const SamplerSpec& spec, RngStream& rng) {
    Point2 v[3];
    for (Point2& p : v) {
        p = {rng.uniform(-spec.aspect_b / 2.0, spec.aspect_b / 2.0),
             rng.uniform(-spec.aspect_a / 2.0, spec.aspect_a / 2.0)};
    }
    return {{v[0], v[1], v[2]}, true};
}

Made make_fractal(const SamplerSpec& spec, RngStream& rng) {
    const double scale = static_cast<double>(spec.fractal_depth);
    Point2 v[3];
    for (Point2& p : v) {
        double x = 0.0, y = 0.0;
        for (int level = 0; level < spec.fractal_depth; ++level) {
            x += scale * rng.uniform(-1.0, 1.0);
        }
        for (int level = 0; level < spec.fractal_depth; ++level) {
            y += scale * rng.uniform(-1.0, 1.0);
        }
        p = {x, y};
    }
    return {{v[0], v[1], v[2]}, true};
}

// Baseline (0,0)-(1,0) is the unit longest side; the free vertex is uniform
// over the feasible region, drawn from its bounding box with the rho > 1
// overshoot rejected.
Made make_l_method(RngStream& rng, std::uint64_t& rejections) {
    for (;;) {
        const Point2 p{rng.uniform(0.5, 1.0),
                       rng.uniform(0.0, std::sin(kPi / 3.0))};
        if (analytic::in_l_region(p)) {
            return {{{0.0, 0.0}, {1.0, 0.0}, p}, false};
        }
        bump_rejections(rejections);
    }
}

// Baseline (0,0)-(1,0) is the unit medium side; the free vertex lives inside
// the unit circle of the first endpoint but outside the unit circle of the
// second.
Made make_m_method(const SamplerSpec& spec, RngStream& rng,
                   std::uint64_t& rejections) {
    if (spec.m_variant == MVariant::area_uniform) {
        for (;;) {
            const Point2 p{rng.uniform(-1.0, 1.0), rng.next_double()};
            if (analytic::in_m_region(p)) {
                return {{{0.0, 0.0}, {1.0, 0.0}, p}, false};
            }
            bump_rejections(rejections);
        }
    }
    // Verbatim recipe: theta uniform in [0, pi/3], rho uniform between the
    // two circle crossings; (1 + cos 2t)/cos t is just 2 cos t.
    const double theta = rng.uniform(0.0, kPi / 3.0);
    const double hi = (1.0 + std::cos(2.0 * theta)) / std::cos(theta);
    const double rho = rng.uniform(1.0, hi);
    const Point2 p{1.0 - rho * std::cos(theta), rho * std::sin(theta)};
    return {{{0.0, 0.0}, {1.0, 0.0}, p}, false};
}

Made make_once(const SamplerSpec& spec, RngStream& rng, std::uint64_t index,
               std::uint64_t count, std::uint64_t& rejections) {
    switch (spec.method) {
        case Method::generated: return make_generated(rng, index, count);
        case Method::polar_uniform:
        case Method::half_normal:
        case Method::quotient: return make_isotropic(spec, rng);
        case Method::ellipse: return make_ellipse(spec, rng);
        case Method::rectangle: return make_rectangle(spec, rng);
        case Method::fractal: return make_fractal(spec, rng);
        case Method::l_method: return make_l_method(rng, rejections);
        case Method::m_method: return make_m_method(spec, rng, rejections);
    }
    throw std::logic_error("sample: unknown method");
}

}  // namespace

SampleOutcome sample(const SamplerSpec& spec, RngStream& rng,
                     std::uint64_t trial_index, std::uint64_t trial_count) {
    if (trial_count < 1 || trial_index >= trial_count) {
        throw std::invalid_argument("sample: need trial_index < trial_count");
    }
    if (spec.aspect_a <= 0.0 || spec.aspect_b <= 0.0 || spec.fractal_depth < 1 ||
        spec.quotient_lo <= 0.0 || spec.quotient_hi <= spec.quotient_lo) {
        throw std::invalid_argument("sample: spec parameters out of range");
    }
    std::uint64_t rejections = 0;
    for (;;) {
        const Made made = make_once(spec, rng, trial_index, trial_count, rejections);
        if (is_degenerate(made.t)) {
            bump_rejections(rejections);
            continue;
        }
        SampleOutcome out;
        out.triangle = made.t;
        out.rejections = rejections;
        if (made.record_all) {
            out.vertex_polar = {to_polar(made.t.a), to_polar(made.t.b),
                                to_polar(made.t.c)};
            out.polar_count = 3;
        } else {
            out.vertex_polar[0] = to_polar(made.t.c);
            out.polar_count = 1;
        }
        return out;
    }
}

}  // namespace mclab::samplers
