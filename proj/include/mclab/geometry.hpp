#pragma once

namespace mclab {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Polar coordinates with rho >= 0 and theta in (-pi, pi].
struct PolarPoint {
    double rho = 0.0;
    double theta = 0.0;
};

struct Triangle {
    Point2 a, b, c;
};

/// The three side lengths sorted ascending: s <= m <= l. For any
/// non-degenerate triangle they satisfy the strict inequality s + m > l.
struct SideLengths {
    double s = 0.0;
    double m = 0.0;
    double l = 0.0;
};

enum class TriangleClass { acute, right, obtuse };

/// s/m in (0, 1] and m/l in (1/2, 1].
struct SideRatios {
    double sdm = 0.0;
    double mdl = 0.0;
};

/// Degeneracy tolerance, applied to twice the triangle area.
inline constexpr double kDegenerateEps = 1e-12;

/// Absolute value of the cross product (b-a) x (c-a).
double twice_area(const Triangle& t);

bool is_degenerate(const Triangle& t, double eps = kDegenerateEps);

/// Pairwise vertex distances sorted ascending.
/// Throws DegenerateTriangleError for (near-)collinear vertices.
SideLengths side_lengths(const Triangle& t);

/// Law of cosines on the longest side: obtuse iff s^2 + m^2 < l^2, right on
/// exact equality (a measure-zero event under every sampler here, so no
/// epsilon band is carved out of acute/obtuse).
TriangleClass classify(const SideLengths& sl);

SideRatios ratios(const SideLengths& sl);

PolarPoint to_polar(const Point2& p);
Point2 from_polar(const PolarPoint& pp);

const char* to_string(TriangleClass c);

}  // namespace mclab
