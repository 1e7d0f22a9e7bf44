#include "mertens/recip.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mertens {

namespace {

bool rel_match(f128 a, f128 b) {
    f128 scale = fabsq(b) > 1 ? fabsq(b) : f128(1);
    return fabsq(a - b) <= scale * 1e-9;
}

// Everything in the R3 closed form that does not depend on (d1, omega),
// hoisted so the optimizer's 40 000 grid cells stay cheap.
struct R3Ctx {
    f128 d;
    f128 lt;        // log t0
    f128 llt;       // log log t0
    f128 lt23;      // lt^{2/3}
    f128 llt13;     // llt^{1/3}
    f128 rr23;      // (llt/lt)^{2/3}, so R_max = omega * rr23
    f128 e_neg_lt;  // e^{-lt} = 1/t0 (underflows to 0 for huge heights, correctly)
    f128 a0;
    f128 logA;      // log 70.6995
    f128 g_lt;      // g(lt) = lt^{2/3} (log lt)^{1/3}
};

R3Ctx make_ctx(f128 d, f128 log_t0) {
    R3Ctx c;
    c.d = d;
    c.lt = log_t0;
    c.llt = logq(log_t0);
    c.lt23 = powq(c.lt, f128(2) / 3);
    c.llt13 = powq(c.llt, f128(1) / 3);
    c.rr23 = powq(c.llt / c.lt, f128(2) / 3);
    c.e_neg_lt = expq(-c.lt);
    c.a0 = a0_constant(log_t0);
    c.logA = logq(parse_f128("70.6995"));
    c.g_lt = c.lt23 * c.llt13;
    return c;
}

// nullptr when feasible, else the short name of the violated condition.
const char* infeasible_reason(const R3Ctx& c, f128 d1, f128 omega) {
    if (omega > num::omega_cap) return "omega cap";
    const f128 rmax = omega * c.rr23;
    if (c.d > 0) {
        const f128 shift = log1pq(rmax * c.e_neg_lt);
        const f128 lt2 = c.lt + shift;
        const f128 ratio = c.g_lt / (powq(lt2, f128(2) / 3) * powq(logq(lt2), f128(1) / 3));
        if (c.d * num::Z3 > ratio + 1e-9) return "width";
    }
    if (!(omega > c.d / c.llt)) return "omega floor";
    if (!(d1 < (2 - rmax) * c.g_lt)) return "d1 ceiling";
    return nullptr;
}

f128 r3_value(const R3Ctx& c, f128 d1, f128 omega) {
    const f128 rmax = omega * c.rr23;
    const f128 B = f128(2) / 3 + parse_f128("4.43795") * powq(omega, f128(3) / 2);
    const f128 pref = powq(c.a0 / (d1 * d1 * d1), f128(1) / 4)
                    * powq(1 + num::log2_ / c.lt, f128(1) / 6);
    const f128 term1 = 3 * num::euler_gamma * d1 / (4 * c.g_lt);
    const f128 inner = log1pq(log1pq(rmax * c.e_neg_lt) / c.lt);
    const f128 bracket = B + (B / c.llt) * inner + c.logA / c.llt;
    const f128 term2 = (4 * (d1 + c.d) / (num::pi * (omega - c.d / c.llt))) * bracket;
    return pref * expq(term1 + term2);
}

constexpr int kGrid = 200;

R3Optimum optimize_core(f128 d, f128 log_t0) {
    const R3Ctx c = make_ctx(d, log_t0);
    const f128 floor_omega = d / c.llt;
    const f128 cap = num::omega_cap;
    if (!(floor_omega < cap))
        throw std::runtime_error("optimize_r3: empty feasible set (omega floor reaches the cap)");

    const f128 d1_hi = 2 * c.g_lt;  // ceiling in the omega -> 0 limit
    const f128 u_lo = logq(f128(1) / 10000);
    const f128 u_hi = logq(d1_hi * parse_f128("0.999999"));
    const f128 span = cap - floor_omega;

    std::vector<f128> d1s(kGrid), omegas(kGrid);
    for (int i = 0; i < kGrid; ++i)
        d1s[i] = expq(u_lo + (u_hi - u_lo) * i / (kGrid - 1));
    for (int j = 0; j < kGrid; ++j)
        omegas[j] = (j == kGrid - 1) ? cap : floor_omega + span * (j + 1) / kGrid;

    std::vector<f128> vals(static_cast<std::size_t>(kGrid) * kGrid, HUGE_VALQ);
#pragma omp parallel for schedule(static)
    for (int idx = 0; idx < kGrid * kGrid; ++idx) {
        const int i = idx / kGrid, j = idx % kGrid;
        if (infeasible_reason(c, d1s[i], omegas[j]) == nullptr)
            vals[static_cast<std::size_t>(idx)] = r3_value(c, d1s[i], omegas[j]);
    }

    // Ascending index scan with strict improvement keeps the lowest d1,
    // then lowest omega, on ties.
    std::size_t best_idx = 0;
    f128 best = HUGE_VALQ;
    for (std::size_t idx = 0; idx < vals.size(); ++idx)
        if (vals[idx] < best) { best = vals[idx]; best_idx = idx; }
    if (!(best < HUGE_VALQ))
        throw std::runtime_error("optimize_r3: empty feasible set (no grid cell satisfies the conditions)");

    const f128 grid_best = best;
    f128 bu = logq(d1s[best_idx / kGrid]);
    f128 bw = omegas[best_idx % kGrid];

    // Nelder-Mead in (log d1, omega) with hard rejection of infeasible points.
    auto obj = [&](f128 u, f128 w) -> f128 {
        const f128 d1 = expq(u);
        if (d1 <= 0 || infeasible_reason(c, d1, w) != nullptr) return HUGE_VALQ;
        return r3_value(c, d1, w);
    };
    f128 pu[3] = {bu, bu + (u_hi - u_lo) / (kGrid - 1), bu};
    f128 pw[3] = {bw, bw, bw + span / kGrid};
    f128 pf[3] = {obj(pu[0], pw[0]), obj(pu[1], pw[1]), obj(pu[2], pw[2])};
    for (int iter = 0; iter < 400; ++iter) {
        int lo = 0, hi = 0, mid;
        for (int k = 1; k < 3; ++k) {
            if (pf[k] < pf[lo]) lo = k;
            if (pf[k] > pf[hi]) hi = k;
        }
        mid = 3 - lo - hi;
        if (lo == hi) mid = (lo + 1) % 3;
        const f128 diam = fabsq(pu[lo] - pu[hi]) + fabsq(pw[lo] - pw[hi])
                        + fabsq(pu[lo] - pu[mid]) + fabsq(pw[lo] - pw[mid]);
        if (diam < 1e-14) break;
        const f128 cu = (pu[lo] + pu[mid]) / 2, cw = (pw[lo] + pw[mid]) / 2;
        const f128 ru = cu + (cu - pu[hi]), rw = cw + (cw - pw[hi]);
        const f128 fr = obj(ru, rw);
        if (fr < pf[lo]) {
            const f128 eu = cu + 2 * (cu - pu[hi]), ew = cw + 2 * (cw - pw[hi]);
            const f128 fe = obj(eu, ew);
            if (fe < fr) { pu[hi] = eu; pw[hi] = ew; pf[hi] = fe; }
            else         { pu[hi] = ru; pw[hi] = rw; pf[hi] = fr; }
        } else if (fr < pf[mid]) {
            pu[hi] = ru; pw[hi] = rw; pf[hi] = fr;
        } else {
            const f128 ku = cu + (pu[hi] - cu) / 2, kw = cw + (pw[hi] - cw) / 2;
            const f128 fk = obj(ku, kw);
            if (fk < pf[hi]) { pu[hi] = ku; pw[hi] = kw; pf[hi] = fk; }
            else {
                for (int k = 0; k < 3; ++k) {
                    if (k == lo) continue;
                    pu[k] = pu[lo] + (pu[k] - pu[lo]) / 2;
                    pw[k] = pw[lo] + (pw[k] - pw[lo]) / 2;
                    pf[k] = obj(pu[k], pw[k]);
                }
            }
        }
    }
    int lo = 0;
    for (int k = 1; k < 3; ++k)
        if (pf[k] < pf[lo]) lo = k;

    R3Optimum out;
    out.grid_best = grid_best;
    if (pf[lo] < grid_best) {
        out.value = pf[lo];
        out.params = R3Params{d, expq(pu[lo]), pw[lo], log_t0};
    } else {
        out.value = grid_best;
        out.params = R3Params{d, d1s[best_idx / kGrid], omegas[best_idx % kGrid], log_t0};
    }
    return out;
}

void require_height(f128 log_t0, const char* who) {
    if (!(log_t0 >= num::log_Hhat * (1 - 1e-12)))
        throw std::runtime_error(std::string(who) + ": log t0 must be at least log(Hhat) = 28.7297");
}

}  // namespace

const R1Entry* r1_table_entries(std::size_t* count) {
    static const std::array<R1Entry, 10> table = [] {
        std::array<R1Entry, 10> t{};
        auto ln10 = to_double_checked(logq(f128(10)), "log 10");
        t[0] = {1 * ln10, 8.101, "10"};
        t[1] = {2 * ln10, 4.339, "10^2"};
        t[2] = {3 * ln10, 3.632, "10^3"};
        t[3] = {to_double_checked(num::log_H, "log H"), 3.422, "H"};
        t[4] = {4 * ln10, 3.264, "10^4"};
        t[5] = {5 * ln10, 3.021, "10^5"};
        t[6] = {7 * ln10, 2.711, "10^7"};
        t[7] = {9 * ln10, 2.518, "10^9"};
        t[8] = {to_double_checked(num::log_Hhat, "log Hhat"), 2.307, "Hhat"};
        t[9] = {40.0, 2.134, "e^40"};
        return t;
    }();
    if (count) *count = table.size();
    return table.data();
}

f128 r1_lookup(f128 W, f128 log_t0) {
    if (!rel_match(W, num::Z1))
        throw std::runtime_error("r1 lookup: no published constants for this W (only W = Z1)");
    std::size_t n = 0;
    const R1Entry* t = r1_table_entries(&n);
    for (std::size_t i = 0; i < n; ++i)
        if (rel_match(log_t0, f128(t[i].log_t0))) return f128(t[i].value);
    throw std::runtime_error("r1 lookup: height not in the published table (no interpolation)");
}

f128 a0_constant(f128 log_t0) {
    if (!(log_t0 >= num::e * (1 - 1e-12)))
        throw std::runtime_error("a0 constant: requires log t0 >= e");
    const f128 s2 = 1 + 16 * expq(-2 * log_t0);
    const f128 s = sqrtq(s2);
    return parse_f128("58.096") * s * (1 + logq(s) / log_t0);
}

ABOmega a_b_omega(f128 omega, f128 log_t0) {
    if (omega < 0)
        throw std::runtime_error("growth envelope: omega must be nonnegative");
    if (omega > num::omega_cap)
        throw std::runtime_error("growth envelope (omega cap): omega must not exceed e^(2/3)/2");
    ABOmega r;
    r.A = (omega > 0) ? parse_f128("70.6995") : a0_constant(log_t0);
    r.B = f128(2) / 3 + parse_f128("4.43795") * powq(omega, f128(3) / 2);
    return r;
}

f128 r3_rmax(f128 omega, f128 log_t0) {
    return omega * powq(logq(log_t0) / log_t0, f128(2) / 3);
}

void r3_check_feasible(const R3Params& p) {
    require_height(p.log_t0, "r3");
    if (!(p.d1 > 0)) throw std::runtime_error("r3: d1 must be positive");
    const R3Ctx c = make_ctx(p.d, p.log_t0);
    if (const char* why = infeasible_reason(c, p.d1, p.omega)) {
        const std::string which(why);
        std::string msg = "r3 infeasible (" + which + "): ";
        if (which == "omega cap")
            msg += "omega must not exceed e^(2/3)/2";
        else if (which == "width")
            msg += "d*Z3 exceeds g(log t0)/g(log(t0+R_max))";
        else if (which == "omega floor")
            msg += "omega must exceed d/loglog t0";
        else
            msg += "d1 must stay below (2-R_max)(log t0)^(2/3)(loglog t0)^(1/3)";
        throw std::runtime_error(msg);
    }
}

f128 r3_formula(const R3Params& p) {
    r3_check_feasible(p);
    const R3Ctx c = make_ctx(p.d, p.log_t0);
    return r3_value(c, p.d1, p.omega);
}

R3Optimum optimize_r3(f128 W3, f128 log_t0) {
    require_height(log_t0, "optimize_r3");
    if (!(W3 >= num::Z3 * (1 - 1e-12)))
        throw std::runtime_error("optimize_r3: W3 must be at least Z3 = 53.989");
    return optimize_core(1 / W3, log_t0);
}

R3Optimum r3_one_line(f128 log_t0) {
    require_height(log_t0, "r3_one_line");
    return optimize_core(0, log_t0);
}

}  // namespace mertens
