#include "mclab/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mclab::analytic {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::numbers::sqrt3;

}  // namespace

RegionAreas region_areas(ObtuseModel model) {
    switch (model) {
        case ObtuseModel::l_method:
            // Quarter circle of radius 1/2 over half the circular segment
            // region: (1/2) * (pi/3 - sqrt(3)/4) = pi/6 - sqrt(3)/8.
            return {kPi / 16.0, 0.5 * (kPi / 3.0 - kSqrt3 / 4.0)};
        case ObtuseModel::m_method:
            return {kPi / 4.0, kPi / 6.0 + kSqrt3 / 4.0};
        default:
            throw std::domain_error(
                "region_areas: defined for l_method and m_method only");
    }
}

double analytic_obtuse(ObtuseModel model) {
    switch (model) {
        case ObtuseModel::l_method:
        case ObtuseModel::m_method: {
            const RegionAreas r = region_areas(model);
            return r.favorable / r.total;
        }
        case ObtuseModel::angle_line:
        case ObtuseModel::big_angle:
            return 0.75;
    }
    throw std::domain_error("analytic_obtuse: unknown model");
}

bool in_l_region(const Point2& p) {
    return p.x >= 0.5 && p.x <= 1.0 && p.y >= 0.0 &&
           p.x * p.x + p.y * p.y <= 1.0;
}

bool in_m_region(const Point2& p) {
    const double dx = p.x - 1.0;
    return p.y >= 0.0 && p.x * p.x + p.y * p.y <= 1.0 &&
           dx * dx + p.y * p.y >= 1.0;
}

bool angle_line_is_obtuse(double a1, double a2) {
    const double lo = std::min(a1, a2);
    const double hi = std::max(a1, a2);
    const double longest = std::max({lo, hi - lo, kPi - hi});
    return longest > kPi / 2.0;
}

bool big_angle_is_obtuse(double big_angle) {
    return big_angle > kPi / 2.0;
}

double simulate_angle_line(std::uint64_t trials, RngStream& rng) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const double a1 = rng.next_double() * kPi;
        const double a2 = rng.next_double() * kPi;
        if (angle_line_is_obtuse(a1, a2)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

double simulate_big_angle(std::uint64_t trials, RngStream& rng) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        if (big_angle_is_obtuse(rng.uniform(kPi / 3.0, kPi))) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace mclab::analytic
