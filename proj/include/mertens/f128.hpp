#pragma once

// ---------------------------------------------------------------------------
// Quad-precision substrate shared by every module.
//
// All delicate arithmetic in this project runs in IEEE binary128 via GCC's
// __float128 / libquadmath.  Two things motivated the choice over binary64:
//
//   * l3-type constants arise as small differences of O(10^2) quantities
//     (e.g. -35.576... = eps - 3.422*(log H)^2/(2*pi)), so ~3 digits are
//     gone before we start, and several downstream comparisons are decided
//     at the 1e-6 level against published 5-digit constants.
//   * the certified one-sided inequalities (short sum <= 2.4, contour
//     constants <= 41.155 and <= 1.26e-5) carry error radii; a 113-bit
//     mantissa keeps the rounding contribution to those radii negligible.
//
// Note: -fext-numeric-literals is not guaranteed, so quad literals that do
// not fit exactly in a double are written as strings through parse_f128().
// ---------------------------------------------------------------------------

#include <quadmath.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mertens {

using f128 = __float128;

// Decimal string -> f128, full 34-digit precision.  Throws on garbage input.
f128 parse_f128(const char* s);
inline f128 parse_f128(const std::string& s) { return parse_f128(s.c_str()); }

// Fixed, locale-independent formatting.  Every number that reaches a report
// goes through one of these two helpers so that identical bit patterns
// always produce identical bytes (the determinism contract).
std::string format_f128(f128 v, int significant_digits = 34);
std::string format_f128_fixed(f128 v, int decimals);

// Narrowing that refuses to hide an overflow.  The two-argument form names
// the quantity in the error message.
double to_double_checked(f128 v);
double to_double_checked(f128 v, const char* what);

bool is_finite(f128 v);

// ---------------------------------------------------------------------------
// Mathematical constants.  Defined in f128.cpp in dependency order; the
// derived ones (H, log H, ...) are computed at startup from the primitives
// rather than transcribed, so there is nothing to mistype.
// ---------------------------------------------------------------------------
namespace num {

extern const f128 pi;
extern const f128 e;
extern const f128 euler_gamma;     // Euler-Mascheroni constant
extern const f128 log2_;

// Zero-free region shape constants.  Z2 belongs to the log log t / log t
// shaped region; the bound pipeline only consumes Z1 and Z3, but all three
// are housed together because they form one family.
extern const f128 Z1;              // 5.558691
extern const f128 Z2;              // 21.233
extern const f128 Z3;              // 53.989

extern const f128 H;               // 2 e^{e^2} = 3236.35598...
extern const f128 log_H;           // log 2 + e^2 = 8.08220327...
extern const f128 Hhat;            // 3 000 175 332 800 (verified-RH height)
extern const f128 log_Hhat;        // 28.7297...

extern const f128 omega_cap;       // e^{2/3}/2, admissible-omega ceiling

}  // namespace num

// ---------------------------------------------------------------------------
// Ball: a value known to lie within [mid - rad, mid + rad].
//
// This is the lightweight enclosure used to certify one-sided inequalities:
// midpoints are f128, radii are double (radii never need 34 digits).  The
// arithmetic is standard midpoint/radius propagation; after every operation
// the radius is bumped by a few ulps of the midpoint so that the f128
// round-to-nearest error of the midpoint computation itself is covered.
// That bump (~1e-33 relative) is invisible next to the genuine radii
// (>= 1e-13 from series remainders and quadrature), but it keeps the
// certificates honest without directed rounding.
// ---------------------------------------------------------------------------
struct Ball {
    f128 mid = 0;
    double rad = 0;

    Ball() = default;
    Ball(f128 m, double r) : mid(m), rad(r) {}
    static Ball exact(f128 m) { return Ball(m, 0.0); }

    f128 upper() const { return mid + (f128)rad; }
    f128 lower() const { return mid - (f128)rad; }
};

// Covers the rounding of one f128 operation that produced `mid`.
double ball_bump(f128 mid);

Ball ball_add(const Ball& a, const Ball& b);
Ball ball_sub(const Ball& a, const Ball& b);
Ball ball_mul(const Ball& a, const Ball& b);
Ball ball_scale(const Ball& a, f128 c);      // c exact
Ball ball_recip(const Ball& a);              // throws if 0 may be inside
Ball ball_div(const Ball& a, const Ball& b);
Ball ball_sqrt(const Ball& a);               // throws if negative may be inside
Ball ball_abs(const Ball& a);

}  // namespace mertens
