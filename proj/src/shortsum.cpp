#include "mertens/shortsum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "mertens/zeta.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mertens {

namespace {

struct TermOut {
    Ball term;          // upper-bound-capable enclosure of 2 / (sqrt(1/4+g^2) |zp|)
    f128 zp_mid = 0;    // |zeta'| midpoint, for the min-|zeta'| report
};

constexpr std::size_t kChunk = 64;

}  // namespace

ShortSumResult short_sum(const ZerosTable& table, f128 gamma_max, bool fast) {
    const f128 cap = (gamma_max > 0) ? gamma_max : num::H;
    std::size_t n = 0;
    while (n < table.gamma.size() && table.gamma[n] <= cap) ++n;
    if (n == 0) throw std::runtime_error("short_sum: no zeros at or below the requested height");

    const double half_ulp = table.precision / 2.0;

    // One log table covering the Euler-Maclaurin truncation at the largest
    // ordinate; shared read-only across threads.
    const double tmax = to_double_checked(table.gamma[n - 1], "short_sum height");
    std::size_t n_logs = static_cast<std::size_t>(tmax) + 1024;
    auto logs = build_log_table(n_logs);

    std::vector<TermOut> terms(n);
    bool failed = false;
    std::string fail_msg;

#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        if (failed) continue;
        try {
            const f128 g = table.gamma[static_cast<std::size_t>(i)];
            Ball zp_abs;
            if (fast) {
                double gd = to_double_checked(g, "zero ordinate");
                // The certified rounding slop in double arithmetic floors
                // near 2e-9 at the top ordinate and grows with the
                // truncation, so a tighter target can never be met.
                CBallD z = zeta_prime_d(0.5, gd, 1e-7);
                double m = std::hypot(z.re, z.im);
                // widen by the table perturbation via the same majorant
                double wid = z.rad + half_ulp * to_double_checked(
                    zeta_second_derivative_majorant(g), "zeta'' majorant");
                zp_abs = Ball{static_cast<f128>(m), wid};
            } else {
                zp_abs = zeta_prime_critical(g, half_ulp, 1e-12, &logs);
            }
            if (zp_abs.lower() <= 0)
                throw std::runtime_error("short_sum: cannot separate zeta' from zero at an ordinate");
            Ball denom = ball_mul(ball_sqrt(ball_add(Ball{f128(0.25), 0.0},
                                                     ball_mul(Ball{g, half_ulp}, Ball{g, half_ulp}))),
                                  zp_abs);
            Ball t = ball_scale(ball_recip(denom), f128(2));
            terms[static_cast<std::size_t>(i)] = TermOut{t, zp_abs.mid};
        } catch (const std::exception& ex) {
#pragma omp critical
            {
                failed = true;
                fail_msg = ex.what();
            }
        }
    }
    if (failed) throw std::runtime_error(fail_msg);

    // Chunked pairwise reduction, shape fixed by n alone.
    std::vector<Ball> partial;
    partial.reserve((n + kChunk - 1) / kChunk);
    for (std::size_t base = 0; base < n; base += kChunk) {
        Ball acc{f128(0), 0.0};
        const std::size_t end = std::min(n, base + kChunk);
        for (std::size_t i = base; i < end; ++i) acc = ball_add(acc, terms[i].term);
        partial.push_back(acc);
    }
    while (partial.size() > 1) {
        std::vector<Ball> next;
        next.reserve((partial.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < partial.size(); i += 2)
            next.push_back(ball_add(partial[i], partial[i + 1]));
        if (partial.size() % 2) next.push_back(partial.back());
        partial.swap(next);
    }

    ShortSumResult out;
    out.sum = partial.front();
    out.zero_count = n;
    out.first_term = terms.front().term.mid;

    f128 tail = 0;
    const f128 half_cap = cap / 2;
    for (std::size_t i = 0; i < n; ++i) {
        const f128 g = table.gamma[i];
        if (terms[i].term.mid > out.max_term) {
            out.max_term = terms[i].term.mid;
            out.max_term_gamma = g;
        }
        if (i == 0 || terms[i].zp_mid < out.min_zeta_prime) {
            out.min_zeta_prime = terms[i].zp_mid;
            out.min_zeta_prime_gamma = g;
        }
        if (g > half_cap) tail += terms[i].term.mid;
    }
    out.tail_fraction = tail / out.sum.mid;
    return out;
}

}  // namespace mertens
