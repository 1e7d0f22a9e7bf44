#include "mertens/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "mertens/quadrature.hpp"

namespace mertens {

namespace floors {
const f128 log_x1 = logq(parse_f128("2.12216e22"));
const f128 classical_log_x0 = parse_f128("363.11");
const f128 k2_positive_log_x = parse_f128("72775.43");
const f128 t0_hhat_log_x = parse_f128("95191.34");
const f128 k0_max = parse_f128("0.48763");
}  // namespace floors

namespace {

const f128 k2_4 = parse_f128("2.4");
const f128 k41155 = parse_f128("41.155");
const f128 k126em5 = parse_f128("1.26e-5");

f128 logsumexp3(f128 a, f128 b, f128 c) {
    f128 m = a > b ? a : b;
    if (c > m) m = c;
    return m + logq(expq(a - m) + expq(b - m) + expq(c - m));
}

}  // namespace

f128 sigma1_log(f128 log_t, f128 W1) {
    if (!(log_t >= logq(f128(3)) * (1 - 1e-12)))
        throw std::runtime_error("sigma1: requires t >= 3");
    return 1 - 1 / (W1 * log_t);
}

f128 sigma2_log(f128 log_t, f128 W3) {
    if (!(log_t >= logq(f128(3)) * (1 - 1e-12)))
        throw std::runtime_error("sigma2: requires t >= 3");
    return 1 - 1 / (W3 * powq(log_t, f128(2) / 3) * powq(logq(log_t), f128(1) / 3));
}

f128 sigma1(f128 t, f128 W1) { return sigma1_log(logq(t), W1); }
f128 sigma2(f128 t, f128 W3) { return sigma2_log(logq(t), W3); }

f128 nu1_log(f128 log_x, f128 log_T) {
    if (!(log_x > 0 && log_T > 0))
        throw std::runtime_error("nu1: requires x > 1 and T > 1");
    const f128 c = 1 + 1 / log_x;
    return 2 * num::e * c
         + (4 * expq(c) / log_x) * (expq(log_T - log_x) + num::e * log_T);
}

f128 nu1_rearranged_log(f128 log_x, f128 log_T) {
    if (!(log_x > 0 && log_T > 0))
        throw std::runtime_error("nu1: requires x > 1 and T > 1");
    const f128 c = 1 + 1 / log_x;
    return 2 * num::e
         + (4 * expq(c) / log_x)
               * (expq(-1 / log_x) / 2 + expq(log_T - log_x) + num::e * log_T);
}

f128 logx_w(f128 W) {
    const f128 a = W * (expq(f128(2)) + num::log2_) * (expq(f128(2)) + num::log2_);
    const f128 b = 16 * logq(f128(10));
    return a > b ? a : b;
}

f128 log_tx_classical(f128 log_x, f128 W) { return sqrtq(log_x / W); }

f128 y0_schedule(f128 log_x) {
    if (!(log_x > 1))
        throw std::runtime_error("Y0 schedule: requires log x > 1");
    return powq(log_x, f128(3) / 5) * powq(logq(log_x), f128(-1) / 5);
}

EllConstants ell_constants(f128 log_x0, f128 W, f128 r1_H, f128 r1_T) {
    if (!(log_x0 >= logx_w(W) * (1 - 1e-12)))
        throw std::runtime_error("ell constants: log x0 below the validity floor log x_W");
    const f128 log_T = log_tx_classical(log_x0, W);
    const f128 c = 1 + 1 / log_x0;
    EllConstants r;
    r.ell1 = r1_H / (2 * num::pi * W);
    r.ell2 = 2 * num::e + r1_T * num::e / (num::pi * sqrtq(W) * log_x0)
           + (4 * expq(c) / log_x0)
                 * (expq(-1 / log_x0) / 2 + expq(log_T - log_x0) + num::e * log_T);
    r.ell3 = (k2_4 + expq(logq(k41155) - log_x0)) * expq(log_T - log_x0 / 2)
           + k126em5 - r1_H * num::log_H * num::log_H / (2 * num::pi);
    return r;
}

C1C2 c1_c2(f128 log_x0, f128 W, f128 r1_H, f128 r1_T) {
    C1C2 r;
    r.ell = ell_constants(log_x0, W, r1_H, r1_T);
    r.c1 = r.ell.ell1 + r.ell.ell2 / sqrtq(log_x0)
         + (r.ell.ell3 > 0 ? r.ell.ell3 / log_x0 : f128(0));
    r.c2 = 1 / sqrtq(W) - logq(log_x0) / sqrtq(log_x0);
    return r;
}

KFunctions k_functions(f128 log_x, f128 W3) {
    if (!(log_x >= floors::log_x1 * (1 - 1e-12)))
        throw std::runtime_error("k functions: require x >= x1 = 2.12216e22");
    KFunctions r;
    const f128 llx = logq(log_x);
    r.k0 = powq(llx, f128(6) / 5) / powq(log_x, f128(3) / 5);
    r.k1 = 1 - r.k0;
    r.k2 = powq(f128(5) / 3, f128(1) / 3) / W3 - r.k0;
    return r;
}

C3C4 c3_c4(f128 log_x0, f128 log_T0, f128 W1, f128 W3,
           f128 r1_H, f128 r1_T0, f128 r3_T0, f128 r3_Tx0) {
    const KFunctions kf = k_functions(log_x0, W3);
    if (!(kf.k2 > 0))
        throw std::runtime_error(
            "c3_c4: k2 must be positive (log x0 below the positivity floor for this W3)");
    const f128 llT0 = logq(log_T0);
    const f128 w31 = (W3 / W1) * (W3 / W1) * (W3 / W1);
    if (!(log_T0 / llT0 <= w31 * (1 + 1e-12)))
        throw std::runtime_error(
            "c3_c4: T0 violates the shape condition log T0/loglog T0 <= (W3/W1)^3");
    const f128 llx = logq(log_x0);
    const f128 t0_size_cap = powq(log_x0, f128(2) / 5) * powq(llx, f128(1) / 5) / W1;
    if (!(log_T0 <= t0_size_cap * (1 + 1e-12)))
        throw std::runtime_error(
            "c3_c4: T0 violates the size condition log T0 <= (log x0)^(2/5)(loglog x0)^(1/5)/W1");
    if (!(log_T0 >= num::log_Hhat * (1 - 1e-12)))
        throw std::runtime_error("c3_c4: T0 must be at least Hhat");
    const f128 Y0 = y0_schedule(log_x0);
    if (!(Y0 >= log_T0))
        throw std::runtime_error("c3_c4: T0 must not exceed T_x0");

    C3C4 r;
    r.c4 = kf.k2;
    r.e1_over_e2 = expq(-(kf.k1 - kf.k2) * Y0);

    r.terms[0] = (nu1_log(log_x0, Y0)
                  + (k2_4 + expq(logq(k41155) - log_x0)) * expq(Y0 - log_x0 / 2))
               * r.e1_over_e2;
    r.terms[1] = r3_Tx0 * powq(f128(3) / 5, f128(1) / 4) * num::e
               * powq(llx, f128(7) / 60) / (num::pi * powq(log_x0, f128(8) / 5))
               * r.e1_over_e2;
    r.terms[2] = powq(f128(3) / 5, f128(5) / 4) * r3_T0 / (num::pi * powq(llx, f128(1) / 12));
    const f128 sdiff = sigma2_log(log_T0, W3) - sigma1_log(log_T0, W1);
    r.terms[3] = (sdiff > 0)
        ? expq(logq(r1_T0 * sdiff * log_T0 / (num::pi * log_x0)) - log_T0)
        : f128(0);
    r.terms[4] = (r1_H * (log_T0 * log_T0 - num::log_H * num::log_H) / (2 * num::pi)
                  + k126em5)
               * expq((kf.k2 - 1) * Y0);
    r.c3 = r.terms[0] + r.terms[1] + r.terms[2] + r.terms[3] + r.terms[4];
    return r;
}

f128 lemma41_rhs_log(f128 log_x, f128 log_T, f128 W, f128 r1_T, f128 r1_H) {
    if (log_x < 0) throw std::runtime_error("lemma41: requires x >= 1");
    if (!(log_T > num::log_H)) throw std::runtime_error("lemma41: requires T > H");
    if (log_x == 0) return HUGE_VALQ;  // the simplified form diverges as x -> 1
    const f128 la = logq(r1_T * num::e * log_T / (num::pi * log_x)) + log_x - log_T;
    const f128 lb = logq(k41155) - log_x / 2;
    const f128 lc = logq(r1_H * (log_T * log_T - num::log_H * num::log_H) / (2 * num::pi)
                         + k126em5)
                  + sigma1_log(log_T, W) * log_x;
    return logsumexp3(la, lb, lc);
}

f128 lemma42_integral(f128 log_x, f128 log_T0, f128 log_T, f128 W3) {
    if (!(log_T >= log_T0))
        throw std::runtime_error("lemma42 integral: requires T >= T0");
    if (log_T == log_T0) return 0;
    auto integrand = [log_x, W3](f128 u) -> Ball {
        const f128 lu = logq(u);
        const f128 v = expq(-log_x / (W3 * powq(u, f128(2) / 3) * powq(lu, f128(1) / 3)))
                     * powq(u, f128(2) / 3) * powq(lu, f128(1) / 4);
        return Ball{v, ball_bump(v)};
    };
    QuadResult q = integrate(integrand, log_T0, log_T, 0.0, 1e-9);
    return q.value.upper();
}

f128 lemma42_rhs_log(f128 log_x, f128 log_T, f128 log_T0, f128 W1, f128 W3,
                     f128 r1_T0, f128 r1_H, f128 r3_T, f128 r3_T0) {
    if (!(log_x > 0)) throw std::runtime_error("lemma42: requires x > 1");
    if (!(log_T > num::log_H)) throw std::runtime_error("lemma42: requires T > H");
    if (!(log_T0 >= num::log_H)) throw std::runtime_error("lemma42: requires T0 >= H");
    const f128 llT0 = logq(log_T0);
    const f128 w31 = (W3 / W1) * (W3 / W1) * (W3 / W1);
    if (!(log_T0 / llT0 <= w31 * (1 + 1e-12)))
        throw std::runtime_error(
            "lemma42: T0 violates the shape condition log T0/loglog T0 <= (W3/W1)^3");

    const f128 l1 = logq(r3_T * powq(log_T, f128(2) / 3) * powq(logq(log_T), f128(1) / 4)
                         * num::e / (num::pi * log_x))
                  + log_x - log_T;
    const f128 integral = lemma42_integral(log_x, log_T0, log_T, W3);
    const f128 l2 = (integral > 0) ? logq(r3_T0 * integral / num::pi) + log_x : -HUGE_VALQ;
    const f128 sdiff = sigma2_log(log_T0, W3) - sigma1_log(log_T0, W1);
    const f128 l3 = (sdiff > 0)
        ? logq(r1_T0 * sdiff * log_T0 / num::pi) - log_T0 + sigma2_log(log_T0, W3) * log_x
        : -HUGE_VALQ;
    const f128 l4 = logq(k41155) - log_x / 2;
    const f128 l5 = logq(r1_H * (log_T0 * log_T0 - num::log_H * num::log_H) / (2 * num::pi)
                         + k126em5)
                  + sigma1_log(log_T0, W1) * log_x;

    f128 m = l1;
    for (f128 v : {l2, l3, l4, l5})
        if (v > m) m = v;
    return m + logq(expq(l1 - m) + expq(l2 - m) + expq(l3 - m) + expq(l4 - m)
                    + expq(l5 - m));
}

f128 theorem_bound_log(f128 log_x, Variant variant, f128 log_x0, bool r1_strict) {
    if (!(log_x >= log_x0 * (1 - 1e-12)))
        throw std::runtime_error("theorem bound: requires x >= x0");
    if (variant == Variant::classical) {
        if (!(log_x0 >= floors::classical_log_x0 * (1 - 1e-12)))
            throw std::runtime_error("theorem bound: classical variant requires log x0 >= 363.11");
        const f128 r1T = r1_strict ? parse_f128("3.422") : parse_f128("2.134");
        C1C2 c = c1_c2(log_x0, num::Z1, parse_f128("3.422"), r1T);
        return logq(c.c1) + log_x - c.c2 * sqrtq(log_x);
    }
    if (!(log_x0 >= floors::t0_hhat_log_x * (1 - 1e-12)))
        throw std::runtime_error("theorem bound: strong variant requires log x0 >= 95191.34");
    C3C4 c = c3_c4(log_x0, num::log_Hhat, num::Z1, num::Z3,
                   parse_f128("3.422"), parse_f128("3.422"),
                   parse_f128("40.944"), parse_f128("40.944"));
    return logq(c.c3) + log_x - c.c4 * y0_schedule(log_x);
}

}  // namespace mertens
