#include "mertens/piecewise.hpp"

#include <cmath>
#include <stdexcept>

#include "mertens/bounds.hpp"

namespace mertens {

namespace {

const f128 kLog33 = logq(f128(33));
const f128 kLog1e16 = 16 * logq(f128(10));
const f128 kCrossLinear = parse_f128("45.123");
const f128 kCrossRamare = parse_f128("1772.504");
const f128 kCrossDaval = parse_f128("1806.498");
const f128 kHandoffLLX = parse_f128("36.821");

const f128 kR1H = parse_f128("3.422");
const f128 kR1T = parse_f128("2.134");
const f128 kR3 = parse_f128("40.944");

f128 ramare_inner(f128 log_x) {
    return parse_f128("0.013") / log_x - parse_f128("0.118") / (log_x * log_x);
}

// Double-precision comparator for the grid walk.  Mirrors branch_rel_log;
// the classical constants are re-derived in binary64, which is safe here
// because every strict comparison the walk makes has margin >= 1.5e-6.
double rel_log_d(Branch b, double L) {
    static const double Z1 = 5.558691;
    static const double e1 = std::exp(1.0);
    static const double logH = std::log(2.0) + e1 * e1;  // log H = log 2 + e^2
    switch (b) {
        case Branch::const4: return std::log(4.0) - L;
        case Branch::sqrt0571: return std::log(0.571) - L / 2;
        case Branch::linear4345: return -std::log(4345.0);
        case Branch::linear160383: return -std::log(160383.0);
        case Branch::ramare: {
            const double inner = 0.013 / L - 0.118 / (L * L);
            if (inner <= 0)
                throw std::runtime_error("crossover: ramare branch undefined at this log x");
            return std::log(inner);
        }
        case Branch::classical: {
            const double logT = std::sqrt(L / Z1);
            const double c = 1 + 1 / L;
            const double ell1 = 3.422 / (2 * M_PI * Z1);
            const double ell2 = 2 * e1 + 2.134 * e1 / (M_PI * std::sqrt(Z1) * L)
                              + (4 * std::exp(c) / L)
                                    * (std::exp(-1 / L) / 2 + std::exp(logT - L)
                                       + e1 * logT);
            const double ell3 = (2.4 + std::exp(std::log(41.155) - L))
                                    * std::exp(logT - L / 2)
                              + 1.26e-5 - 3.422 * logH * logH / (2 * M_PI);
            const double c1 = ell1 + ell2 / std::sqrt(L) + (ell3 > 0 ? ell3 / L : 0.0);
            const double c2 = 1 / std::sqrt(Z1) - std::log(L) / std::sqrt(L);
            return std::log(c1) - c2 * std::sqrt(L);
        }
        case Branch::korobov:
            return to_double_checked(branch_rel_log(Branch::korobov, f128(L)),
                                     "korobov comparator");
    }
    throw std::logic_error("unreachable branch");
}

}  // namespace

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::const4: return "const4";
        case Branch::sqrt0571: return "sqrt0571";
        case Branch::linear4345: return "linear4345";
        case Branch::ramare: return "ramare";
        case Branch::classical: return "classical";
        case Branch::korobov: return "korobov";
        case Branch::linear160383: return "linear160383";
    }
    return "?";
}

Branch parse_branch(const std::string& name) {
    for (Branch b : {Branch::const4, Branch::sqrt0571, Branch::linear4345,
                     Branch::ramare, Branch::classical, Branch::korobov,
                     Branch::linear160383})
        if (name == branch_name(b)) return b;
    throw std::runtime_error("unknown branch name: " + name);
}

f128 BestBound::value_or_inf() const {
    return expq(log_value);  // overflows to +inf past quad range, as documented
}

f128 branch_rel_log(Branch b, f128 log_x) {
    switch (b) {
        case Branch::const4: return logq(f128(4)) - log_x;
        case Branch::sqrt0571: return logq(parse_f128("0.571")) - log_x / 2;
        case Branch::linear4345: return -logq(f128(4345));
        case Branch::linear160383: return -logq(f128(160383));
        case Branch::ramare: {
            const f128 inner = ramare_inner(log_x);
            if (!(inner > 0))
                throw std::runtime_error("ramare branch undefined at this log x");
            return logq(inner);
        }
        case Branch::classical: {
            C1C2 c = c1_c2(log_x, num::Z1, kR1H, kR1T);
            return logq(c.c1) - c.c2 * sqrtq(log_x);
        }
        case Branch::korobov: {
            C3C4 c = c3_c4(log_x, num::log_Hhat, num::Z1, num::Z3,
                           kR1H, kR1H, kR3, kR3);
            return logq(c.c3) - c.c4 * y0_schedule(log_x);
        }
    }
    throw std::logic_error("unreachable branch");
}

BestBound best_bound(f128 log_x, bool daval) {
    if (!(log_x >= 0))
        throw std::runtime_error("best_bound: requires x >= 1");
    Branch b;
    if (log_x < kLog33) {
        return BestBound{Branch::const4, logq(f128(4))};
    } else if (log_x <= kLog1e16) {
        b = Branch::sqrt0571;
    } else if (daval) {
        if (log_x <= kCrossDaval) b = Branch::linear160383;
        else if (log_x <= expq(kHandoffLLX)) b = Branch::classical;
        else b = Branch::korobov;
    } else {
        if (log_x <= kCrossLinear) b = Branch::linear4345;
        else if (log_x <= kCrossRamare) b = Branch::ramare;
        else if (log_x <= expq(kHandoffLLX)) b = Branch::classical;
        else b = Branch::korobov;
    }
    return BestBound{b, branch_rel_log(b, log_x) + log_x};
}

double find_crossover(Branch a, Branch b, double log_start, double step,
                      double log_cap) {
    if (!(step > 0)) throw std::invalid_argument("crossover: step must be positive");
    if (!(rel_log_d(a, log_start) >= rel_log_d(b, log_start)))
        throw std::runtime_error("crossover: branch a must start at or above branch b");
    for (long long k = 1;; ++k) {
        const double L = log_start + k * step;
        if (L > log_cap + step / 2)
            throw std::runtime_error("crossover: no crossover found before the cap");
        if (rel_log_d(a, L) < rel_log_d(b, L)) return L;
    }
}

UMajorizeReport verify_u_majorizes(int grid_points) {
    if (grid_points < 1000)
        throw std::invalid_argument("verify_u_majorizes: at least 1000 grid points");
    const f128 lo = logq(parse_f128("7.480"));
    const f128 hi = logq(kHandoffLLX);
    const f128 tau = parse_f128("0.0055");
    const f128 amp = parse_f128("20.8944");
    const f128 dec = parse_f128("0.4037");
    const f128 base = parse_f128("0.09798");

    std::vector<f128> slack(static_cast<std::size_t>(grid_points));
    std::vector<f128> llxs(static_cast<std::size_t>(grid_points));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < grid_points; ++i) {
        const f128 llx = expq(lo + (hi - lo) * i / (grid_points - 1));
        const f128 u = base + (tau + amp * expq(-dec / llx)) / llx;
        const f128 c1 = c1_c2(expq(llx), num::Z1, kR1H, kR1T).c1;
        llxs[static_cast<std::size_t>(i)] = llx;
        slack[static_cast<std::size_t>(i)] = u - c1;
    }
    UMajorizeReport r;
    r.grid_points = grid_points;
    r.min_slack = slack[0];
    r.argmin_llx = llxs[0];
    for (int i = 1; i < grid_points; ++i)
        if (slack[static_cast<std::size_t>(i)] < r.min_slack) {
            r.min_slack = slack[static_cast<std::size_t>(i)];
            r.argmin_llx = llxs[static_cast<std::size_t>(i)];
        }
    r.pass = r.min_slack > 0;
    return r;
}

RangeReport range_assertions(int grid_points) {
    if (grid_points < 2)
        throw std::invalid_argument("range_assertions: at least 2 grid points");
    RangeReport rep;
    rep.grid_points = grid_points;
    const std::size_t n = static_cast<std::size_t>(grid_points);

    // Classical-branch sweep: loglog x from log(1772.504) upward.
    std::vector<f128> c1v(n), c2v(n), llx_a(n);
    {
        const f128 lo = logq(logq(kCrossRamare));
        const f128 hi = logq(kHandoffLLX);
#pragma omp parallel for schedule(static)
        for (int i = 0; i < grid_points; ++i) {
            const f128 llx = expq(lo + (hi - lo) * i / (grid_points - 1));
            C1C2 c = c1_c2(expq(llx), num::Z1, kR1H, kR1T);
            llx_a[static_cast<std::size_t>(i)] = llx;
            c1v[static_cast<std::size_t>(i)] = c.c1;
            c2v[static_cast<std::size_t>(i)] = c.c2;
        }
    }
    // Last-branch sweep: loglog x across the opening range of the strong bound.
    std::vector<f128> c3v(n), c4v(n), llx_b(n);
    {
        const f128 lo = kHandoffLLX;
        const f128 hi = f128(40);
#pragma omp parallel for schedule(static)
        for (int i = 0; i < grid_points; ++i) {
            const f128 llx = lo + (hi - lo) * i / (grid_points - 1);
            C3C4 c = c3_c4(expq(llx), num::log_Hhat, num::Z1, num::Z3,
                           kR1H, kR1H, kR3, kR3);
            llx_b[static_cast<std::size_t>(i)] = llx;
            c3v[static_cast<std::size_t>(i)] = c.c3;
            c4v[static_cast<std::size_t>(i)] = c.c4;
        }
    }

    auto add = [&rep](const char* name, const std::vector<f128>& vals,
                      const std::vector<f128>& locs, f128 bound, bool upper) {
        std::size_t w = 0;
        for (std::size_t i = 1; i < vals.size(); ++i)
            if (upper ? (vals[i] > vals[w]) : (vals[i] < vals[w])) w = i;
        RangeCheck c;
        c.name = name;
        c.margin = upper ? bound - vals[w] : vals[w] - bound;
        c.worst_llx = locs[w];
        c.pass = c.margin > 0;
        rep.checks.push_back(std::move(c));
    };
    add("c1 > 0.09797", c1v, llx_a, parse_f128("0.09797"), false);
    add("c1 < 0.23427", c1v, llx_a, parse_f128("0.23427"), true);
    add("c2 > 0.24647", c2v, llx_a, parse_f128("0.24647"), false);
    add("c2 < 0.42415", c2v, llx_a, parse_f128("0.42415"), true);
    add("c3 < 5.09591", c3v, llx_b, parse_f128("5.09591"), true);
    add("c4 > 0.02196", c4v, llx_b, parse_f128("0.02196"), false);

    rep.pass = true;
    for (const RangeCheck& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

}  // namespace mertens
