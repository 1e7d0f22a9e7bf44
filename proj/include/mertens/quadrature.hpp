#pragma once

// ---------------------------------------------------------------------------
// Adaptive Gauss-Kronrod quadrature (7-15 pair) plus the two fixed contour
// constants the bound pipeline consumes:
//
//   i4_constant   = 0.28861 sqrt(2^5/pi) (6/5) Int_{-H}^{H}
//                     sqrt(9 pi^2/16 + pi^2 t^2/4) / (1/4 + t^2) dt
//                 <= 41.155
//   i3_i5_constant = (1/pi) Int_{-1/2}^{1} dy / (sqrt(y^2+H^2) |zeta(y+iH)|)
//                 <= 1.26e-5
//
// Error model: node values may carry their own certified radii (those are
// propagated rigorously through the weighted sum); the truncation error per
// panel uses the QUADPACK-style estimate (200 |K15 - G7|)^{3/2}, which for
// the analytic integrands here overstates the converged-panel error by many
// orders of magnitude but is an estimate, not an interval bound.  Both
// one-sided claims above hold with slack >= 3e-4 resp. 2.9e-8 against
// reported radii below 1e-9 resp. 1e-12.
// ---------------------------------------------------------------------------

#include "mertens/f128.hpp"

#include <functional>

namespace mertens {

struct QuadResult {
    Ball value;
    int panels = 0;        // accepted panels
    int evaluations = 0;   // integrand calls
};

// Integrand returns an enclosure of f(x).
using BallFn = std::function<Ball(f128)>;

// Integrates f over [a, b].  A panel is accepted when its error share is
// within its length-proportional share of abs_tol + rel_tol * |integral|.
// Deterministic: fixed splitting order, no threading.
QuadResult integrate(const BallFn& f, f128 a, f128 b, double abs_tol,
                     double rel_tol, int max_depth = 48);

Ball i4_constant();     // target radius ~1e-9
Ball i3_i5_constant();  // target radius ~1e-12

}  // namespace mertens
