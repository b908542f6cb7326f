#pragma once

#include <cstdint>

#include "mclab/rng.hpp"

namespace mclab::stick {

/// Three positive lengths summing to 1 (within 1e-12).
struct StickPieces {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

/// Which piece receives the second cut in the sequential procedure.
enum class CutPolicy { random_piece, larger_piece, smaller_piece };

enum class Mode {
    parallel,
    sequential_random,
    sequential_larger,
    sequential_smaller,
};

/// Pieces induced by two cut positions on the unit stick. May contain zero
/// pieces when the cuts collide or hit an endpoint; the cut operations below
/// resample those draws.
StickPieces pieces_from_cuts(double c1, double c2);

/// Two independent uniform cut points; the pieces are the three gaps.
StickPieces cut_parallel(RngStream& rng);

/// First cut uniform on the stick, then a second cut uniform on the piece
/// chosen by `policy` (random_piece picks with a fair coin).
StickPieces cut_sequential(CutPolicy policy, RngStream& rng);

/// True iff every piece is strictly shorter than 1/2.
bool forms_triangle(const StickPieces& p);

/// Conditional success probability x/(1-x) for a smaller first piece of
/// length x. Throws std::domain_error outside [0, 1/2].
double pdf_second_cut(double x);

/// Composite Simpson quadrature of pdf_second_cut over [lo, hi] within
/// [0, 1/2]. Odd step counts are rounded up to even. Over [0, 1/2] the
/// integral converges to ln2 - 1/2.
double integrate_success(double lo, double hi, std::uint64_t steps);

double analytic_probability(Mode mode);

}  // namespace mclab::stick
