#pragma once

#include <cstdint>

#include "mclab/geometry.hpp"
#include "mclab/rng.hpp"

namespace mclab::analytic {

/// Closed-form models for the obtuse-triangle probability. l_method and
/// m_method fix the longest (resp. medium) side at unit length and take an
/// area ratio over the feasible vertex region; angle_line cuts the angle sum
/// like a stick; big_angle draws the largest angle uniformly on [pi/3, pi].
enum class ObtuseModel { l_method, m_method, angle_line, big_angle };

struct RegionAreas {
    double favorable = 0.0;  // A_o
    double total = 0.0;      // A_A
};

double analytic_obtuse(ObtuseModel model);

/// Favorable and total region areas; defined for l_method and m_method.
RegionAreas region_areas(ObtuseModel model);

/// Vertex region for the unit-long-side model: baseline (0,0)-(1,0) is the
/// longest side, the free vertex lies in x in [1/2, 1], y >= 0, within unit
/// distance of the origin.
bool in_l_region(const Point2& p);

/// Vertex region for the unit-medium-side model: baseline (0,0)-(1,0) is the
/// medium side, the free vertex lies in the upper half plane within unit
/// distance of (0,0) and at least unit distance from (1,0).
bool in_m_region(const Point2& p);

/// Two points on a segment of length pi; obtuse iff some section exceeds
/// pi/2 (strict).
bool angle_line_is_obtuse(double a1, double a2);

bool big_angle_is_obtuse(double big_angle);

double simulate_angle_line(std::uint64_t trials, RngStream& rng);

double simulate_big_angle(std::uint64_t trials, RngStream& rng);

}  // namespace mclab::analytic
