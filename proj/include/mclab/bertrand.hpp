#pragma once

#include <cstdint>

#include "mclab/geometry.hpp"
#include "mclab/rng.hpp"

namespace mclab::bertrand {

/// A chord of the unit circle; both endpoints on the circle, distinct.
struct Chord {
    Point2 p1, p2;
};

/// The three constructions (numbered in this order): a chord through two
/// uniform endpoints; a chord perpendicular to a uniformly oriented radius
/// at a uniform point along it; a chord whose midpoint is an area-uniform
/// point of the disk.
enum class ChordMethod { endpoints, radius_point, disk_point };

/// Chord through the circle points at the two given angles.
Chord chord_from_angles(double phi1, double phi2);

/// Chord perpendicular to the radius at angle `radius_angle`, crossing it
/// at distance `dist` in [0, 1) from the center.
Chord chord_perpendicular_at(double radius_angle, double dist);

Chord draw_chord(ChordMethod method, RngStream& rng);

double chord_length(const Chord& c);

/// True iff strictly longer than sqrt(3), the side of the inscribed
/// equilateral triangle (the boundary itself has probability zero).
bool is_long(const Chord& c);

double estimate_long_probability(ChordMethod method, std::uint64_t trials,
                                 RngStream& rng);

/// Exactly 1/3, 1/2, 1/4 for endpoints, radius_point, disk_point.
double analytic_long_probability(ChordMethod method);

}  // namespace mclab::bertrand
