#pragma once

// ---------------------------------------------------------------------------
// Certified zeta(s), zeta'(s) on and near the critical strip.
//
// Engine: Euler-Maclaurin acceleration,
//
//   zeta(s) = sum_{n<N} n^-s + N^-s/2 + N^{1-s}/(s-1)
//           + sum_{k=1}^{K} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
//           + R_K(s),
//
// with K = 12 Bernoulli corrections and N >= max(32, |t|/2), doubled until
// the certified remainder meets the caller's target radius.  The remainder
// certificate for zeta is Backlund's
//
//   |R_K| <= |(s+2K+1)/(sigma+2K+1)| * |first omitted correction term|,
//
// and for zeta' it is the integral-representation bound obtained from
// |~B_{2K+1}(x)|/(2K+1)! <= 2.5/(2pi)^{2K+1} (see zeta.cpp).  Reported radii
// also cover accumulated rounding via a term-magnitude tally.
//
// The engine is a template over the real type: f128 for certified work,
// double for the CLI's fast mode.  Radii are doubles either way.
// ---------------------------------------------------------------------------

#include "mertens/f128.hpp"

#include <vector>

namespace mertens {

// Disc enclosure in the complex plane: the true value lies within distance
// rad of (re, im).
struct CBall {
    f128 re = 0, im = 0;
    double rad = 0;
};

Ball cball_abs(const CBall& z);  // |center| +- rad encloses the true modulus

// Shared log table so the short-sum loop does not recompute log n for every
// zero.  Entry [n] is log n; entry [0] and [1] are 0.  Read-only once built,
// safe to share across threads.
std::vector<f128> build_log_table(std::size_t n_max);

// zeta and zeta' at s = sigma + it.  Domain: -1 <= sigma <= 4, |t| <= 1e5,
// |s-1| >= 1e-3 (the simple pole is excluded).  Throws std::domain_error
// outside, std::runtime_error if the target radius proves unreachable.
CBall zeta(f128 sigma, f128 t, double target_radius,
           const std::vector<f128>* log_table = nullptr);
CBall zeta_prime(f128 sigma, f128 t, double target_radius,
                 const std::vector<f128>* log_table = nullptr);

// |zeta'(1/2 + i gamma)| for an ordinate known only to +-gamma_uncertainty:
// the enclosure of the modulus at the given gamma is widened by
// gamma_uncertainty * (a crude certified sup of |zeta''| near the point), so
// the ball is valid for the true ordinate anywhere in the interval.
Ball zeta_prime_critical(f128 gamma, f128 gamma_uncertainty, double target_radius,
                         const std::vector<f128>* log_table = nullptr);

// Certified (very loose) upper bound for |zeta''(sigma + it')| over
// sigma ~ 1/2 and |t' - t| <= 1: every Euler-Maclaurin term bounded in
// absolute value.  Order of magnitude 1e3 for t up to ~3e3; it only ever
// multiplies the 5e-10 table half-ulp, so looseness is harmless.
f128 zeta_second_derivative_majorant(f128 t);

// Double-precision twins (fast mode; enclosure semantics identical, radii
// just include double rounding at ~1e-13 scale).
struct CBallD {
    double re = 0, im = 0, rad = 0;
};
CBallD zeta_d(double sigma, double t, double target_radius);
CBallD zeta_prime_d(double sigma, double t, double target_radius);

}  // namespace mertens
