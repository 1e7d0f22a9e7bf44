#include "mertens/f128.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

namespace mertens {

f128 parse_f128(const char* s) {
    const char* end = nullptr;
    f128 v = strtoflt128(s, const_cast<char**>(&end));
    if (end == s) {
        throw std::invalid_argument(std::string("not a number: '") + s + "'");
    }
    // Trailing junk after the numeral is a parse error too; the zeros table
    // reader relies on this to reject malformed lines.
    while (*end == ' ' || *end == '\t' || *end == '\r' || *end == '\n') ++end;
    if (*end != '\0') {
        throw std::invalid_argument(std::string("trailing characters in number: '") + s + "'");
    }
    return v;
}

std::string format_f128(f128 v, int significant_digits) {
    char buf[128];
    quadmath_snprintf(buf, sizeof buf, "%.*Qg", significant_digits, v);
    return buf;
}

std::string format_f128_fixed(f128 v, int decimals) {
    char buf[128];
    quadmath_snprintf(buf, sizeof buf, "%.*Qf", decimals, v);
    return buf;
}

double to_double_checked(f128 v, const char* what) {
    double d = (double)v;
    if (!std::isfinite(d) && is_finite(v)) {
        throw std::range_error(std::string(what) + " does not fit in double: " +
                               format_f128(v, 6));
    }
    return d;
}

double to_double_checked(f128 v) { return to_double_checked(v, "value"); }

bool is_finite(f128 v) { return finiteq(v) != 0; }

namespace num {

// Primitives first, derived constants after; this file is the single place
// where any of them is spelled out.
const f128 pi = 2 * acosq(0);
const f128 e = expq(1);
const f128 euler_gamma = parse_f128("0.57721566490153286060651209008240243");
const f128 log2_ = logq(2);

const f128 Z1 = parse_f128("5.558691");
const f128 Z2 = parse_f128("21.233");
const f128 Z3 = parse_f128("53.989");

const f128 H = 2 * expq(expq(2));
const f128 log_H = log2_ + expq(2);
const f128 Hhat = 3000175332800.0;  // integer below 2^53, exact as a double literal
const f128 log_Hhat = logq(Hhat);

const f128 omega_cap = expq(f128(2) / 3) / 2;

}  // namespace num

// ---------------------------------------------------------------------------
// Ball arithmetic
// ---------------------------------------------------------------------------

double ball_bump(f128 mid) {
    // A couple of ulps of the midpoint (f128 eps is 1.9e-34) plus a subnormal
    // floor so that a zero midpoint still gets a nonzero cover.
    double m = fabs((double)mid);
    if (!std::isfinite(m)) m = 1e300;  // bounded nonsense beats silent NaN
    return m * 1e-33 + 1e-305;
}

// The propagation formulas below are tight at the interval edges, and the
// radius itself is computed in round-to-nearest double arithmetic, so the
// result can fall a few double ulps short of a true cover.  A relative
// inflation of the radius restores strict containment; the midpoint bump
// alone cannot, because it scales with the midpoint rather than the radius.
constexpr double kRadSlack = 1.0 + 1e-15;

Ball ball_add(const Ball& a, const Ball& b) {
    f128 m = a.mid + b.mid;
    return Ball(m, (a.rad + b.rad) * kRadSlack + ball_bump(m));
}

Ball ball_sub(const Ball& a, const Ball& b) {
    f128 m = a.mid - b.mid;
    return Ball(m, (a.rad + b.rad) * kRadSlack + ball_bump(m));
}

Ball ball_mul(const Ball& a, const Ball& b) {
    f128 m = a.mid * b.mid;
    double r = (double)fabsq(a.mid) * b.rad + (double)fabsq(b.mid) * a.rad + a.rad * b.rad;
    return Ball(m, r * kRadSlack + ball_bump(m));
}

Ball ball_scale(const Ball& a, f128 c) {
    f128 m = a.mid * c;
    return Ball(m, (double)fabsq(c) * a.rad * kRadSlack + ball_bump(m));
}

Ball ball_recip(const Ball& a) {
    f128 lo = fabsq(a.mid) - (f128)a.rad;
    if (lo <= 0) {
        throw std::domain_error("ball_recip: interval may contain zero");
    }
    f128 m = 1 / a.mid;
    // |1/x - 1/mid| = |x - mid| / |x*mid| <= rad / (|mid| * lo)
    double r = a.rad / (double)(fabsq(a.mid) * lo);
    return Ball(m, r * kRadSlack + ball_bump(m));
}

Ball ball_div(const Ball& a, const Ball& b) { return ball_mul(a, ball_recip(b)); }

Ball ball_sqrt(const Ball& a) {
    f128 lo = a.mid - (f128)a.rad;
    if (lo < 0) {
        throw std::domain_error("ball_sqrt: interval extends below zero");
    }
    f128 m = sqrtq(a.mid);
    // sqrt is 1/2-Lipschitz relative to sqrt(lo); fall back to sqrt(rad) when
    // the interval touches zero.
    double r;
    if (lo > 0) {
        r = a.rad / (2.0 * (double)sqrtq(lo));
    } else {
        r = std::sqrt(a.rad);
    }
    return Ball(m, r * kRadSlack + ball_bump(m));
}

Ball ball_abs(const Ball& a) {
    f128 m = fabsq(a.mid);
    return Ball(m, a.rad + ball_bump(m));
}

}  // namespace mertens
