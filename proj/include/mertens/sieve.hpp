#pragma once

// ---------------------------------------------------------------------------
// Exact Mertens function at desk scale via a segmented Moebius sieve.
//
// Per 2^20-element segment: every n starts with mu = 1 and an unfactored
// remainder rem = n.  For each prime p <= sqrt(xmax), multiples of p flip
// the sign and strip one factor p; multiples of p^2 are annihilated.  A
// remainder > 1 at the end is a single prime factor above sqrt(xmax) and
// flips the sign once more.
//
// The scan accumulates M(n) = sum mu(k) for k <= n in two passes: parallel
// per-segment sums, a serial prefix, then a parallel per-value walk with
// known segment offsets.  Segment size is fixed and cross-segment reductions
// happen in segment order, so every reported number is independent of the
// thread count.  The |M(x)| <= 0.571 sqrt(x) test is done in exact integer
// arithmetic (10^6 M^2 <= 571^2 x).
// ---------------------------------------------------------------------------

#include <cstdint>
#include <utility>
#include <vector>

namespace mertens {

inline constexpr std::uint64_t kSieveSegment = std::uint64_t(1) << 20;

// mu(n) for n in [lo, hi], inclusive; lo >= 1.
std::vector<std::int8_t> mobius_range(std::uint64_t lo, std::uint64_t hi);

// M(x); convenience wrapper over the scan.
long long mertens(std::uint64_t x);

struct MertensScan {
    std::uint64_t xmax = 0;
    long long m_at_xmax = 0;

    long long max_abs_m = 0;  // over [1, xmax]
    std::uint64_t argmax_abs = 0;

    long long max_abs_m_small = 0;  // over [1, min(32, xmax)]
    std::uint64_t argmax_abs_small = 0;

    // sqrt-bound scan over [33, xmax]: largest |M(n)|/sqrt(n), and whether
    // |M(n)| <= 0.571 sqrt(n) held everywhere (exact integer check).
    double max_ratio = 0.0;
    std::uint64_t argmax_ratio = 0;
    bool sqrt_bound_ok = true;

    // (x, M(x)) at x = step, 2*step, ...
    std::vector<std::pair<std::uint64_t, long long>> checkpoints;
};

// checkpoint_step = 0 disables checkpoints.  `parallel` selects the OpenMP
// path; the serial path is the reference the tests compare against.
MertensScan mertens_scan(std::uint64_t xmax, std::uint64_t checkpoint_step,
                         bool parallel = true);

}  // namespace mertens
