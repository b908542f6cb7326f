#include "mclab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mclab/errors.hpp"

namespace mclab {

double twice_area(const Triangle& t) {
    const double ux = t.b.x - t.a.x;
    const double uy = t.b.y - t.a.y;
    const double vx = t.c.x - t.a.x;
    const double vy = t.c.y - t.a.y;
    return std::fabs(ux * vy - uy * vx);
}

bool is_degenerate(const Triangle& t, double eps) {
    return twice_area(t) < eps;
}

SideLengths side_lengths(const Triangle& t) {
    if (is_degenerate(t)) {
        throw DegenerateTriangleError("side_lengths: degenerate triangle");
    }
    double d[3] = {
        std::hypot(t.b.x - t.a.x, t.b.y - t.a.y),
        std::hypot(t.c.x - t.b.x, t.c.y - t.b.y),
        std::hypot(t.a.x - t.c.x, t.a.y - t.c.y),
    };
    std::sort(d, d + 3);
    return {d[0], d[1], d[2]};
}

TriangleClass classify(const SideLengths& sl) {
    const double lhs = sl.s * sl.s + sl.m * sl.m;
    const double rhs = sl.l * sl.l;
    if (lhs < rhs) return TriangleClass::obtuse;
    if (lhs == rhs) return TriangleClass::right;
    return TriangleClass::acute;
}

SideRatios ratios(const SideLengths& sl) {
    return {sl.s / sl.m, sl.m / sl.l};
}

PolarPoint to_polar(const Point2& p) {
    double theta = std::atan2(p.y, p.x);
    if (theta <= -std::numbers::pi) theta = std::numbers::pi;
    return {std::hypot(p.x, p.y), theta};
}

Point2 from_polar(const PolarPoint& pp) {
    return {pp.rho * std::cos(pp.theta), pp.rho * std::sin(pp.theta)};
}

const char* to_string(TriangleClass c) {
    switch (c) {
        case TriangleClass::acute: return "acute";
        case TriangleClass::right: return "right";
        case TriangleClass::obtuse: return "obtuse";
    }
    return "?";
}

}  // namespace mclab
