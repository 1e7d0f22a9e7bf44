#pragma once

// ---------------------------------------------------------------------------
// The main-bound assembly: contour abscissae sigma1/sigma2, the truncated
// Perron error nu1, the two contour-lemma right-hand sides, and the
// calculators for the headline constants
//
//   |M(x)| < c1(x0) x exp(-c2(x0) sqrt(log x))          (classical region)
//   |M(x)| < c3(x0) x exp(-c4(x0) (log x)^{3/5} (loglog x)^{-1/5})
//
// x reaches e^{10^5} and beyond, so every function works in log x; bound
// values come back as logs.  All arithmetic is quad precision: ell3 is a
// ~1e-5 number produced by cancelling O(10^2) quantities, which costs three
// digits in binary64.
// ---------------------------------------------------------------------------

#include "mertens/f128.hpp"

namespace mertens {

// Validity floors, kept as named literals and re-derived from their
// defining inequalities in the test suite.
namespace floors {
extern const f128 log_x1;             // log(2.12216e22): T_x exceeds H from here
extern const f128 classical_log_x0;   // 363.11
extern const f128 k2_positive_log_x;  // 72775.43: k2 > 0 from here (W3 = Z3)
extern const f128 t0_hhat_log_x;      // 95191.34: T0 = Hhat admissible from here
extern const f128 k0_max;             // 0.48763: cap on k0 for x >= x1
}  // namespace floors

f128 sigma1_log(f128 log_t, f128 W1);  // 1 - 1/(W1 log t)
f128 sigma2_log(f128 log_t, f128 W3);  // 1 - 1/(W3 (log t)^{2/3} (loglog t)^{1/3})
f128 sigma1(f128 t, f128 W1);          // require t >= 3
f128 sigma2(f128 t, f128 W3);

// nu1(x,T) = 2ec + (4e^c/log x)(T/x + e log T), c = 1 + 1/log x, and the
// algebraically identical rearrangement 2e + (4e^c/log x)(e^{-1/log x}/2 + ...).
f128 nu1_log(f128 log_x, f128 log_T);
f128 nu1_rearranged_log(f128 log_x, f128 log_T);

// log x_W = max{W (e^2 + log 2)^2, 16 log 10}, the floor below which the
// T_x schedule would drop T below H.
f128 logx_w(f128 W);

// log T_x = sqrt(log x / W) on the classical schedule.
f128 log_tx_classical(f128 log_x, f128 W);

// Y0 = log T_x = (log x)^{3/5} (loglog x)^{-1/5} on the strong schedule.
f128 y0_schedule(f128 log_x);

struct EllConstants {
    f128 ell1, ell2, ell3;
};
// r1_H multiplies the H-height terms (3.422); r1_T the T-height terms
// (2.134 table-calibrated default, 3.422 in strict mode).
EllConstants ell_constants(f128 log_x0, f128 W, f128 r1_H, f128 r1_T);

struct C1C2 {
    f128 c1, c2;
    EllConstants ell;
};
C1C2 c1_c2(f128 log_x0, f128 W, f128 r1_H, f128 r1_T);

struct KFunctions {
    f128 k0, k1, k2;
};
KFunctions k_functions(f128 log_x, f128 W3);  // require log x >= log x1

struct C3C4 {
    f128 c3, c4;
    f128 e1_over_e2;
    f128 terms[5];  // the five summands of c3, for reporting
};
// T0 enters as log T0; preconditions checked: k2 > 0, the T0 shape
// condition log T0/loglog T0 <= (W3/W1)^3, the T0 size condition
// log T0 <= (log x0)^{2/5}(loglog x0)^{1/5}/W1, and Hhat <= T0 <= T_x0.
C3C4 c3_c4(f128 log_x0, f128 log_T0, f128 W1, f128 W3,
           f128 r1_H, f128 r1_T0, f128 r3_T0, f128 r3_Tx0);

// log of the full contour-lemma right-hand sides (the bounds on
// |Perron integral - short sum|).
f128 lemma41_rhs_log(f128 log_x, f128 log_T, f128 W, f128 r1_T, f128 r1_H);

// Middle integral of the second lemma after substituting u = log t:
// int exp(-log x/(W3 u^{2/3}(log u)^{1/3})) u^{2/3} (log u)^{1/4} du
// over [log T0, log T], adaptive quadrature at relative tolerance 1e-9.
f128 lemma42_integral(f128 log_x, f128 log_T0, f128 log_T, f128 W3);

f128 lemma42_rhs_log(f128 log_x, f128 log_T, f128 log_T0, f128 W1, f128 W3,
                     f128 r1_T0, f128 r1_H, f128 r3_T, f128 r3_T0);

enum class Variant { classical, korobov };

// log of the theorem bound on |M(x)| with constants frozen at x0.
// classical: W = Z1, r1_H = 3.422, r1_T = 2.134 (3.422 when r1_strict);
// korobov: W1 = Z1, W3 = Z3, T0 = Hhat, R1 <= 3.422, R3 <= 40.944.
f128 theorem_bound_log(f128 log_x, Variant variant, f128 log_x0,
                       bool r1_strict = false);

}  // namespace mertens
