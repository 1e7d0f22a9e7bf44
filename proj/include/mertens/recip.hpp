#pragma once

// ---------------------------------------------------------------------------
// Explicit bounds on 1/|zeta| along and near the 1-line.
//
// Two families:
//   * r1_lookup: the published table of constants R1(W, t0) for the
//     classical zero-free region sigma >= 1 - 1/(W log t).  Lookup only;
//     no interpolation, no extrapolation.
//   * r3_formula: the closed-form constant R3(d, d1, omega) for the
//     Vinogradov-Korobov region, valid for t >= t0 subject to four
//     feasibility conditions, plus a (d1, omega) optimizer.
//
// Heights t0 reach e^{72775} and beyond, so every entry point takes
// log t0 rather than t0 itself.
// ---------------------------------------------------------------------------

#include <string>

#include "mertens/f128.hpp"

namespace mertens {

// Published (W, t0) -> R1 pairs, all at W = Z1.  Arguments must match a
// table entry to relative 1e-9; anything else throws (no interpolation).
f128 r1_lookup(f128 W, f128 log_t0);

struct R1Entry {
    double log_t0;
    double value;
    const char* label;  // human-readable height, e.g. "10^5"
};
const R1Entry* r1_table_entries(std::size_t* count);

// Growth envelope |zeta(s)| <= A * (log t)^B on sigma >= 1 - omega-shaped
// strips.  A = 70.6995 for omega > 0; at omega = 0 it tightens to the
// height-dependent a0(t0), valid for log t0 >= e, decreasing in t0 and
// never above 60.8301.
struct ABOmega {
    f128 A;
    f128 B;
};
ABOmega a_b_omega(f128 omega, f128 log_t0);
f128 a0_constant(f128 log_t0);

struct R3Params {
    f128 d = 0;       // zero-free width parameter, 1/W3 (0 for the 1-line case)
    f128 d1 = 0;      // contour offset
    f128 omega = 0;   // strip-shape parameter, in (d/loglog t0, e^{2/3}/2]
    f128 log_t0 = 0;  // log of the height the bound starts at
};

// R_max = omega * (loglog t0 / log t0)^{2/3}, the height shift the proof
// pays for the strip shape.
f128 r3_rmax(f128 omega, f128 log_t0);

// Closed-form R3.  Throws a descriptive error naming the violated
// condition when p is infeasible:
//   "omega cap"    omega must not exceed e^{2/3}/2
//   "width"        d*Z3 must not exceed g(log t0)/g(log(t0+R_max)),
//                  g(L) = L^{2/3} (log L)^{1/3}; checked with 1e-9 slack
//                  because d = 1/Z3 sits on the boundary to rounding
//   "omega floor"  omega must exceed d/loglog t0
//   "d1 ceiling"   d1 must stay below (2-R_max) (log t0)^{2/3} (loglog t0)^{1/3}
f128 r3_formula(const R3Params& p);

// Throws with the condition's short name if p is infeasible, else returns.
void r3_check_feasible(const R3Params& p);

struct R3Optimum {
    R3Params params;
    f128 value = 0;
    f128 grid_best = 0;  // best value seen on the coarse grid alone
};

// Minimizes r3_formula over (d1, omega) at fixed d = 1/W3 and log t0:
// 200 x 200 feasibility grid (d1 log-spaced, omega linear), then
// Nelder-Mead refinement from the grid argmin with infeasible points
// rejected outright.  Deterministic: grid cells fill independently and the
// argmin scan runs serially with ties broken by lowest d1, then lowest
// omega.
R3Optimum optimize_r3(f128 W3, f128 log_t0);

// The 1-line specialization d = 0, optimized the same way.
R3Optimum r3_one_line(f128 log_t0);

}  // namespace mertens
