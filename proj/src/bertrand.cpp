#include "mclab/bertrand.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mclab/errors.hpp"

namespace mclab::bertrand {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint64_t kRejectionCap = 1'000'000;

Point2 circle_point(double angle) {
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

Chord chord_from_angles(double phi1, double phi2) {
    return {circle_point(phi1), circle_point(phi2)};
}

Chord chord_perpendicular_at(double radius_angle, double dist) {
    // Endpoints sit at +/- acos(dist) around the radius direction.
    const double half = std::acos(dist);
    return chord_from_angles(radius_angle - half, radius_angle + half);
}

Chord draw_chord(ChordMethod method, RngStream& rng) {
    std::uint64_t rejections = 0;
    for (;;) {
        switch (method) {
            case ChordMethod::endpoints: {
                const double phi1 = rng.uniform(0.0, kTwoPi);
                const double phi2 = rng.uniform(0.0, kTwoPi);
                if (phi1 == phi2) break;  // coincident endpoints, resample
                return chord_from_angles(phi1, phi2);
            }
            case ChordMethod::radius_point: {
                const double angle = rng.uniform(0.0, kTwoPi);
                const double dist = rng.next_double();
                if (dist == 1.0) break;
                return chord_perpendicular_at(angle, dist);
            }
            case ChordMethod::disk_point: {
                const double angle = rng.uniform(0.0, kTwoPi);
                const double rho = std::sqrt(rng.next_double());
                if (rho == 0.0) break;  // center: chord direction undefined
                return chord_perpendicular_at(angle, rho);
            }
        }
        if (++rejections >= kRejectionCap) {
            throw NonConvergenceError("draw_chord: rejection cap exceeded");
        }
    }
}

double chord_length(const Chord& c) {
    return std::hypot(c.p2.x - c.p1.x, c.p2.y - c.p1.y);
}

bool is_long(const Chord& c) {
    return chord_length(c) > std::numbers::sqrt3;
}

double estimate_long_probability(ChordMethod method, std::uint64_t trials,
                                 RngStream& rng) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        if (is_long(draw_chord(method, rng))) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

double analytic_long_probability(ChordMethod method) {
    switch (method) {
        case ChordMethod::endpoints: return 1.0 / 3.0;
        case ChordMethod::radius_point: return 0.5;
        case ChordMethod::disk_point: return 0.25;
    }
    throw std::domain_error("analytic_long_probability: unknown method");
}

}  // namespace mclab::bertrand
