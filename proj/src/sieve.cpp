#include "mertens/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mertens {

namespace {

std::vector<std::uint32_t> primes_up_to(std::uint64_t n) {
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        primes.push_back((std::uint32_t)p);
        for (std::uint64_t m = p * p; m <= n; m += p) composite[m] = true;
    }
    return primes;
}

// mu over [lo, hi] given the prime table covering sqrt(hi).
void mobius_segment(std::uint64_t lo, std::uint64_t hi,
                    const std::vector<std::uint32_t>& primes,
                    std::vector<std::int8_t>& mu,
                    std::vector<std::uint64_t>& rem) {
    const std::size_t len = (std::size_t)(hi - lo + 1);
    mu.assign(len, 1);
    rem.resize(len);
    for (std::size_t i = 0; i < len; ++i) rem[i] = lo + i;

    for (std::uint32_t p : primes) {
        const std::uint64_t pp = (std::uint64_t)p * p;
        if ((std::uint64_t)p > hi) break;
        std::uint64_t m = ((lo + p - 1) / p) * (std::uint64_t)p;
        for (; m <= hi; m += p) {
            mu[(std::size_t)(m - lo)] = -mu[(std::size_t)(m - lo)];
            rem[(std::size_t)(m - lo)] /= p;
        }
        if (pp > hi) continue;
        std::uint64_t q = ((lo + pp - 1) / pp) * pp;
        for (; q <= hi; q += pp) mu[(std::size_t)(q - lo)] = 0;
    }
    // Leftover factor above sqrt(hi): exactly one prime, one more sign flip.
    for (std::size_t i = 0; i < len; ++i) {
        if (mu[i] != 0 && rem[i] > 1) mu[i] = -mu[i];
    }
    if (lo == 1) mu[0] = 1;  // mu(1): rem stayed 1, nothing to do, but be explicit
}

}  // namespace

std::vector<std::int8_t> mobius_range(std::uint64_t lo, std::uint64_t hi) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("mobius_range: need 1 <= lo <= hi");
    const auto primes = primes_up_to((std::uint64_t)std::sqrt((double)hi) + 2);
    std::vector<std::int8_t> mu;
    std::vector<std::uint64_t> rem;
    mobius_segment(lo, hi, primes, mu, rem);
    return mu;
}

MertensScan mertens_scan(std::uint64_t xmax, std::uint64_t checkpoint_step,
                         bool parallel) {
    if (xmax < 1) throw std::invalid_argument("mertens_scan: xmax >= 1 required");
    MertensScan out;
    out.xmax = xmax;

    const auto primes = primes_up_to((std::uint64_t)std::sqrt((double)xmax) + 2);
    const std::uint64_t nseg = (xmax - 1) / kSieveSegment + 1;

    // Pass 1: per-segment mu sums.
    std::vector<long long> seg_sum(nseg, 0);
#pragma omp parallel for schedule(static, 1) if (parallel)
    for (long long si = 0; si < (long long)nseg; ++si) {
        const std::uint64_t lo = (std::uint64_t)si * kSieveSegment + 1;
        const std::uint64_t hi = std::min(xmax, lo + kSieveSegment - 1);
        std::vector<std::int8_t> mu;
        std::vector<std::uint64_t> rem;
        mobius_segment(lo, hi, primes, mu, rem);
        long long s = 0;
        for (std::int8_t v : mu) s += v;
        seg_sum[si] = s;
    }

    // Serial exclusive prefix: M just before each segment.
    std::vector<long long> seg_offset(nseg, 0);
    for (std::uint64_t si = 1; si < nseg; ++si) {
        seg_offset[si] = seg_offset[si - 1] + seg_sum[si - 1];
    }
    out.m_at_xmax = seg_offset[nseg - 1] + seg_sum[nseg - 1];

    // Pass 2: per-value walk with known offsets.  Checkpoints land in a
    // preallocated slot array, so writes from different segments never race
    // and never depend on scheduling.
    const std::uint64_t ncheck =
        checkpoint_step ? xmax / checkpoint_step : 0;
    std::vector<long long> check_vals(ncheck, 0);

    struct SegMax {
        long long max_abs = -1;
        std::uint64_t arg = 0;
        long long max_abs_small = -1;
        std::uint64_t arg_small = 0;
        double max_ratio = -1.0;
        std::uint64_t arg_ratio = 0;
        bool sqrt_ok = true;
    };
    std::vector<SegMax> seg_max(nseg);

#pragma omp parallel for schedule(static, 1) if (parallel)
    for (long long si = 0; si < (long long)nseg; ++si) {
        const std::uint64_t lo = (std::uint64_t)si * kSieveSegment + 1;
        const std::uint64_t hi = std::min(xmax, lo + kSieveSegment - 1);
        std::vector<std::int8_t> mu;
        std::vector<std::uint64_t> rem;
        mobius_segment(lo, hi, primes, mu, rem);

        SegMax sm;
        long long m = seg_offset[si];
        for (std::uint64_t n = lo; n <= hi; ++n) {
            m += mu[(std::size_t)(n - lo)];
            const long long am = m < 0 ? -m : m;
            if (am > sm.max_abs) {
                sm.max_abs = am;
                sm.arg = n;
            }
            if (n <= 32 && am > sm.max_abs_small) {
                sm.max_abs_small = am;
                sm.arg_small = n;
            }
            if (n >= 33) {
                // exact: |M| <= 0.571 sqrt(n)  <=>  10^6 M^2 <= 571^2 n
                if (1000000ull * (std::uint64_t)(am * am) > 326041ull * n) {
                    sm.sqrt_ok = false;
                }
                const double r = (double)am / std::sqrt((double)n);
                if (r > sm.max_ratio) {
                    sm.max_ratio = r;
                    sm.arg_ratio = n;
                }
            }
            if (checkpoint_step && n % checkpoint_step == 0) {
                check_vals[n / checkpoint_step - 1] = m;
            }
        }
        seg_max[si] = sm;
    }

    // Combine in segment order; ties keep the earliest n.
    out.max_abs_m = -1;
    out.max_abs_m_small = -1;
    out.max_ratio = -1.0;
    for (std::uint64_t si = 0; si < nseg; ++si) {
        const SegMax& sm = seg_max[si];
        if (sm.max_abs > out.max_abs_m) {
            out.max_abs_m = sm.max_abs;
            out.argmax_abs = sm.arg;
        }
        if (sm.max_abs_small > out.max_abs_m_small) {
            out.max_abs_m_small = sm.max_abs_small;
            out.argmax_abs_small = sm.arg_small;
        }
        if (sm.max_ratio > out.max_ratio) {
            out.max_ratio = sm.max_ratio;
            out.argmax_ratio = sm.arg_ratio;
        }
        out.sqrt_bound_ok = out.sqrt_bound_ok && sm.sqrt_ok;
    }
    if (out.max_abs_m_small < 0) {
        out.max_abs_m_small = 0;  // xmax was 0-ish; unreachable given guard
    }
    if (out.max_ratio < 0) {
        out.max_ratio = 0.0;  // the ratio scan starts at 33
    }
    out.checkpoints.reserve(ncheck);
    for (std::uint64_t i = 0; i < ncheck; ++i) {
        out.checkpoints.emplace_back((i + 1) * checkpoint_step, check_vals[i]);
    }
    return out;
}

long long mertens(std::uint64_t x) {
    return mertens_scan(x, 0, x > (std::uint64_t)4 * kSieveSegment).m_at_xmax;
}

}  // namespace mertens
