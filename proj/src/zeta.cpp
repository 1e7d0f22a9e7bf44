#include "mertens/zeta.hpp"

#include <cmath>
#include <cstddef>

namespace mertens {

namespace {

// ---------------------------------------------------------------------------
// Real-type abstraction: the one engine below runs in f128 (certified mode)
// or double (fast mode).
// ---------------------------------------------------------------------------

template <typename R>
struct rmath;

template <>
struct rmath<f128> {
    static f128 log(f128 x) { return logq(x); }
    static f128 exp(f128 x) { return expq(x); }
    static f128 sqrt(f128 x) { return sqrtq(x); }
    static f128 fabs(f128 x) { return fabsq(x); }
    static void sincos(f128 x, f128* s, f128* c) { sincosq(x, s, c); }
    static f128 pi() { return num::pi; }
    static constexpr double eps = 1.93e-34;
};

template <>
struct rmath<double> {
    static double log(double x) { return std::log(x); }
    static double exp(double x) { return std::exp(x); }
    static double sqrt(double x) { return std::sqrt(x); }
    static double fabs(double x) { return std::fabs(x); }
    static void sincos(double x, double* s, double* c) {
        *s = std::sin(x);
        *c = std::cos(x);
    }
    static double pi() { return M_PI; }
    static constexpr double eps = 2.23e-16;
};

template <typename R>
struct cplx {
    R re{}, im{};
};

template <typename R>
cplx<R> cadd(cplx<R> a, cplx<R> b) { return {a.re + b.re, a.im + b.im}; }
template <typename R>
cplx<R> csub(cplx<R> a, cplx<R> b) { return {a.re - b.re, a.im - b.im}; }
template <typename R>
cplx<R> cmul(cplx<R> a, cplx<R> b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <typename R>
cplx<R> cscale(cplx<R> a, R c) { return {a.re * c, a.im * c}; }
template <typename R>
R cabs2(cplx<R> a) { return a.re * a.re + a.im * a.im; }
template <typename R>
R cabs(cplx<R> a) { return rmath<R>::sqrt(cabs2(a)); }
template <typename R>
cplx<R> cinv(cplx<R> a) {
    R d = cabs2(a);
    return {a.re / d, -a.im / d};
}
template <typename R>
cplx<R> cdiv(cplx<R> a, cplx<R> b) { return cmul(a, cinv(b)); }

// Bernoulli numbers B_2 .. B_26 as exact integer fractions; the engine
// needs B_{2k}/(2k)! for k = 1..13 (K corrections plus the first omitted
// term).  Dividing exact integers at runtime costs one rounding each and
// avoids transcribing 13 reduced fractions by hand.
struct Frac {
    long long num, den;
};
constexpr Frac kBernoulli[13] = {
    {1, 6},           {-1, 30},        {1, 42},       {-1, 30},   {5, 66},
    {-691, 2730},     {7, 6},          {-3617, 510},  {43867, 798},
    {-174611, 330},   {854513, 138},   {-236364091, 2730}, {8553103, 6}};

constexpr int kK = 12;  // Bernoulli corrections actually summed

template <typename R>
R bernoulli_over_fact(int k) {
    // B_{2k} / (2k)!  for k = 1..13; factorials stay exact well past 26!.
    R f = 1;
    for (int i = 2; i <= 2 * k; ++i) f = f * (R)i;
    return ((R)kBernoulli[k - 1].num / (R)kBernoulli[k - 1].den) / f;
}

// ---------------------------------------------------------------------------
// One Euler-Maclaurin pass at truncation N.  Returns the value and a
// certified radius (series remainder + rounding tally).  `want_prime`
// switches between zeta and its derivative; everything else is shared.
// ---------------------------------------------------------------------------

template <typename R>
void em_pass(R sigma, R t, std::size_t N, bool want_prime,
             const std::vector<f128>* log_table, cplx<R>& out, double& radius) {
    using M = rmath<R>;
    const cplx<R> s{sigma, t};

    cplx<R> sum{0, 0};
    R abs_tally = 0;  // sum of |term|, to cover accumulated rounding

    // Main sum over n < N (the n = 1 term is 1 for zeta, 0 for zeta').
    if (!want_prime) {
        sum.re = 1;
        abs_tally = 1;
    }
    for (std::size_t n = 2; n < N; ++n) {
        R ln = (log_table && n < log_table->size()) ? (R)(*log_table)[n]
                                                    : M::log((R)n);
        R mag = M::exp(-sigma * ln);
        R sn, cn;
        M::sincos(-t * ln, &sn, &cn);
        if (want_prime) {
            R m = -ln * mag;  // d/ds n^{-s} = -log n * n^{-s}
            sum.re += m * cn;
            sum.im += m * sn;
            abs_tally += M::fabs(m);
        } else {
            sum.re += mag * cn;
            sum.im += mag * sn;
            abs_tally += mag;
        }
    }

    const R lnN = (log_table && N < log_table->size()) ? (R)(*log_table)[N]
                                                       : M::log((R)N);
    R sN, cN;
    M::sincos(-t * lnN, &sN, &cN);
    const cplx<R> cisN{cN, sN};                    // N^{-it}
    const R NmS = M::exp(-sigma * lnN);            // N^{-sigma}
    const cplx<R> Nms = cscale(cisN, NmS);         // N^{-s}
    const cplx<R> sm1{sigma - 1, t};
    const cplx<R> inv_sm1 = cinv(sm1);

    // N^{-s}/2 and N^{1-s}/(s-1), with their derivatives in prime mode.
    if (want_prime) {
        sum = cadd(sum, cscale(Nms, -lnN / 2));
        // d/ds [N^{1-s}/(s-1)] = N^{1-s} (-lnN/(s-1) - 1/(s-1)^2)
        cplx<R> N1ms = cscale(Nms, (R)N);
        cplx<R> fac = cadd(cscale(inv_sm1, -lnN),
                           cscale(cmul(inv_sm1, inv_sm1), (R)-1));
        sum = cadd(sum, cmul(N1ms, fac));
        abs_tally += NmS * lnN / 2 + NmS * (R)N * (lnN + 1) / cabs(sm1);
    } else {
        sum = cadd(sum, cscale(Nms, (R)0.5));
        sum = cadd(sum, cmul(cscale(Nms, (R)N), inv_sm1));
        abs_tally += NmS / 2 + NmS * (R)N / cabs(sm1);
    }

    // Bernoulli corrections.  p = s(s+1)...(s+2k-2) is maintained
    // incrementally, as is h = sum 1/(s+j) (needed for the derivative).
    cplx<R> p = s;                // rising factorial with 2k-1 factors
    cplx<R> h = cinv(s);          // sum_{j<2k-1} 1/(s+j)
    R S1 = (R)1 / cabs(s);        // sum_{j<2k-1} 1/|s+j|
    R Npow = NmS / (R)N;          // N^{-sigma-2k+1} magnitude, k = 1
    const R invN2 = (R)1 / ((R)N * (R)N);
    for (int k = 1; k <= kK; ++k) {
        const R bk = bernoulli_over_fact<R>(k);
        cplx<R> base = cscale(cmul(cisN, p), bk * Npow);  // B/(2k)! p N^{-s-2k+1}
        if (want_prime) {
            cplx<R> fac = {h.re - lnN, h.im};
            sum = cadd(sum, cmul(base, fac));
            abs_tally += M::fabs(bk) * Npow * cabs(p) * (S1 + lnN);
        } else {
            sum = cadd(sum, base);
            abs_tally += M::fabs(bk) * Npow * cabs(p);
        }
        // extend p, h by the factors (s+2k-1), (s+2k) for the next round
        cplx<R> f1{sigma + (R)(2 * k - 1), t};
        cplx<R> f2{sigma + (R)(2 * k), t};
        p = cmul(p, cmul(f1, f2));
        h = cadd(h, cadd(cinv(f1), cinv(f2)));
        S1 += (R)1 / cabs(f1) + (R)1 / cabs(f2);
        Npow *= invN2;
    }
    // After the loop p has 2K+1 factors and Npow = N^{-sigma-2K-1}.

    double remainder;
    if (!want_prime) {
        // Backlund: |R_K| <= |(s+2K+1)/(sigma+2K+1)| * |first omitted term|.
        cplx<R> sK{sigma + (R)(2 * kK + 1), t};
        R ratio = cabs(sK) / (sigma + (R)(2 * kK + 1));
        R first_omitted =
            M::fabs(bernoulli_over_fact<R>(kK + 1)) * cabs(p) * Npow;
        remainder = (double)(ratio * first_omitted);
    } else {
        // From R_K(s) = -p_{2K+1}/(2K+1)! Int_N^inf ~B_{2K+1}(x) x^{-s-2K-1} dx
        // and |~B_m(x)|/m! <= 2 zeta(m)/(2pi)^m <= 2.5/(2pi)^{2K+1}:
        //   |R_K'| <= 2.5/(2pi)^{2K+1} |p_{2K+1}| N^{-a} (S1/a + lnN/a + 1/a^2),
        // a = sigma + 2K (one log x factor from d/ds, one S1 from p').
        R a = sigma + (R)(2 * kK);
        R coef = (R)2.5;
        R twopi = 2 * M::pi();
        for (int i = 0; i < 2 * kK + 1; ++i) coef /= twopi;
        R env = coef * cabs(p) * (Npow * (R)N) * (S1 / a + lnN / a + (R)1 / (a * a));
        remainder = (double)env;
    }

    // Rounding cover: every accumulated magnitude times a generous multiple
    // of the working epsilon times the operation count.
    double slop = (double)abs_tally * M::eps * (double)(N + 400) * 8.0;
    out = sum;
    radius = remainder + slop;
}

template <typename R>
void em_eval(R sigma, R t, double target_radius, bool want_prime,
             const std::vector<f128>* log_table, cplx<R>& out, double& radius) {
    double at = (double)rmath<R>::fabs(t);
    if ((double)sigma < -1.0 - 1e-15 || (double)sigma > 4.0 + 1e-15 || at > 1e5) {
        throw std::domain_error("zeta: s outside -1 <= Re <= 4, |Im| <= 1e5");
    }
    {
        double dre = (double)sigma - 1.0, dim = at;
        if (dre * dre + dim * dim < 1e-6) {
            throw std::domain_error("zeta: s too close to the pole at 1");
        }
    }
    std::size_t N = (std::size_t)(at / 2.0) + 1;
    if (N < 32) N = 32;
    for (;;) {
        em_pass<R>(sigma, t, N, want_prime, log_table, out, radius);
        if (radius <= target_radius) return;
        if (N > (1u << 22)) {
            throw std::runtime_error("zeta: target radius unreachable at N=2^22");
        }
        N *= 2;
    }
}

}  // namespace

std::vector<f128> build_log_table(std::size_t n_max) {
    std::vector<f128> t(n_max + 1, 0);
    for (std::size_t n = 2; n <= n_max; ++n) t[n] = logq((f128)n);
    return t;
}

Ball cball_abs(const CBall& z) {
    f128 m = sqrtq(z.re * z.re + z.im * z.im);
    return Ball(m, z.rad + ball_bump(m));
}

CBall zeta(f128 sigma, f128 t, double target_radius,
           const std::vector<f128>* log_table) {
    cplx<f128> v;
    double r;
    em_eval<f128>(sigma, t, target_radius, false, log_table, v, r);
    return CBall{v.re, v.im, r};
}

CBall zeta_prime(f128 sigma, f128 t, double target_radius,
                 const std::vector<f128>* log_table) {
    cplx<f128> v;
    double r;
    em_eval<f128>(sigma, t, target_radius, true, log_table, v, r);
    return CBall{v.re, v.im, r};
}

Ball zeta_prime_critical(f128 gamma, f128 gamma_uncertainty, double target_radius,
                         const std::vector<f128>* log_table) {
    CBall zp = zeta_prime(f128(1) / 2, gamma, target_radius, log_table);
    Ball m = cball_abs(zp);
    if (gamma_uncertainty > 0) {
        m.rad += (double)(gamma_uncertainty * zeta_second_derivative_majorant(gamma));
    }
    return m;
}

f128 zeta_second_derivative_majorant(f128 t) {
    // Termwise absolute values of the twice-differentiated Euler-Maclaurin
    // expansion at sigma = 1/2, made monotone-safe for any ordinate within
    // +-1 of t.  Deliberately loose (factor ~2-5); it multiplies a 5e-10
    // table half-ulp downstream, so only the order of magnitude matters.
    const f128 at = fabsq(t) + 1;
    std::size_t N = (std::size_t)((double)at / 2.0) + 1;
    if (N < 32) N = 32;

    f128 total = 0;
    for (std::size_t n = 2; n < N; ++n) {
        f128 ln = logq((f128)n);
        total += ln * ln / sqrtq((f128)n);
    }
    const f128 lnN = logq((f128)N);
    const f128 NmS = 1 / sqrtq((f128)N);
    total += lnN * lnN * NmS / 2;

    // |d^2/ds^2 [N^{1-s}/(s-1)]| <= N^{1/2} ((lnN)^2/D + 2 lnN/D^2 + 2/D^3)
    const f128 D = (double)at > 3.0 ? at - 2 : f128(1);
    total += sqrtq((f128)N) * (lnN * lnN / D + 2 * lnN / (D * D) + 2 / (D * D * D));

    // Bernoulli corrections: |d^2 [p_m N^{-s-m+...}]| with |p_m| <= prod(|s|+j),
    // |p'| <= |p| S1, |p''| <= |p| (S1^2 + S2).
    const f128 smod = at + 2;  // >= |1/2 + it'| for |t'-t| <= 1
    f128 P = smod;
    f128 S1 = 1 / D, S2 = 1 / (D * D);
    f128 Npow = NmS / (f128)N;  // N^{-1/2-2k+1}, k=1
    const f128 invN2 = f128(1) / ((f128)N * (f128)N);
    f128 twopi = 2 * num::pi;
    for (int k = 1; k <= kK; ++k) {
        f128 bk = fabsq(bernoulli_over_fact<f128>(k));
        total += bk * P * Npow * (lnN * lnN + 2 * lnN * S1 + S1 * S1 + S2);
        P *= (smod + (f128)(2 * k - 1)) * (smod + (f128)(2 * k));
        S1 += 2 / D;
        S2 += 2 / (D * D);
        Npow *= invN2;
    }
    // Remainder of the twice-differentiated tail, same envelope as in
    // em_pass but with (ln x)^2 moments of the integral.
    f128 coef = 2.5;
    for (int i = 0; i < 2 * kK + 1; ++i) coef /= twopi;
    f128 a = f128(1) / 2 + 2 * kK;
    f128 mom0 = 1 / a, mom1 = lnN / a + 1 / (a * a);
    f128 mom2 = lnN * lnN / a + 2 * lnN / (a * a) + 2 / (a * a * a);
    total += coef * P * (Npow * (f128)N) *
             ((S1 * S1 + S2) * mom0 + 2 * S1 * mom1 + mom2);

    return total * 2;  // final safety doubling
}

CBallD zeta_d(double sigma, double t, double target_radius) {
    cplx<double> v;
    double r;
    em_eval<double>(sigma, t, target_radius, false, nullptr, v, r);
    return CBallD{v.re, v.im, r};
}

CBallD zeta_prime_d(double sigma, double t, double target_radius) {
    cplx<double> v;
    double r;
    em_eval<double>(sigma, t, target_radius, true, nullptr, v, r);
    return CBallD{v.re, v.im, r};
}

}  // namespace mertens
