#include "mclab/stick.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mclab::stick {

namespace {

bool all_positive(const StickPieces& p) {
    return p.a > 0.0 && p.b > 0.0 && p.c > 0.0;
}

}  // namespace

StickPieces pieces_from_cuts(double c1, double c2) {
    const double lo = std::min(c1, c2);
    const double hi = std::max(c1, c2);
    return {lo, hi - lo, 1.0 - hi};
}

StickPieces cut_parallel(RngStream& rng) {
    for (;;) {
        const StickPieces p = pieces_from_cuts(rng.next_double(), rng.next_double());
        if (all_positive(p)) return p;
    }
}

StickPieces cut_sequential(CutPolicy policy, RngStream& rng) {
    for (;;) {
        const double first = rng.next_double();
        const double left = first;
        const double right = 1.0 - first;
        if (left <= 0.0 || right <= 0.0) continue;

        bool cut_left;
        switch (policy) {
            case CutPolicy::random_piece:
                cut_left = rng.next_double() < 0.5;
                break;
            case CutPolicy::larger_piece:
                cut_left = left >= right;
                break;
            case CutPolicy::smaller_piece:
                cut_left = left < right;
                break;
            default:
                cut_left = true;
        }
        const double chosen = cut_left ? left : right;
        const double kept = cut_left ? right : left;

        const double w = rng.next_double() * chosen;
        const StickPieces p{w, chosen - w, kept};
        if (all_positive(p)) return p;
    }
}

bool forms_triangle(const StickPieces& p) {
    return p.a < 0.5 && p.b < 0.5 && p.c < 0.5;
}

double pdf_second_cut(double x) {
    if (!(x >= 0.0 && x <= 0.5)) {
        throw std::domain_error("pdf_second_cut: x outside [0, 1/2]");
    }
    return x / (1.0 - x);
}

double integrate_success(double lo, double hi, std::uint64_t steps) {
    if (!(lo >= 0.0 && lo < hi && hi <= 0.5)) {
        throw std::domain_error("integrate_success: need 0 <= lo < hi <= 1/2");
    }
    if (steps < 2) {
        throw std::domain_error("integrate_success: need steps >= 2");
    }
    if (steps % 2 != 0) steps += 1;

    const double h = (hi - lo) / static_cast<double>(steps);
    // Kahan-compensated sums keep the 1e-9 target reachable at 10^6 steps.
    double odd = 0.0, odd_c = 0.0;
    double even = 0.0, even_c = 0.0;
    for (std::uint64_t k = 1; k < steps; ++k) {
        const double fx = pdf_second_cut(lo + h * static_cast<double>(k));
        if (k % 2 == 1) {
            const double y = fx - odd_c;
            const double t = odd + y;
            odd_c = (t - odd) - y;
            odd = t;
        } else {
            const double y = fx - even_c;
            const double t = even + y;
            even_c = (t - even) - y;
            even = t;
        }
    }
    return h / 3.0 *
           (pdf_second_cut(lo) + pdf_second_cut(hi) + 4.0 * odd + 2.0 * even);
}

double analytic_probability(Mode mode) {
    const double ln2 = std::log(2.0);
    switch (mode) {
        case Mode::parallel: return 0.25;
        case Mode::sequential_random: return ln2 - 0.5;
        case Mode::sequential_larger: return 2.0 * ln2 - 1.0;
        case Mode::sequential_smaller: return 0.0;
    }
    throw std::domain_error("analytic_probability: unknown mode");
}

}  // namespace mclab::stick
