#pragma once

// ---------------------------------------------------------------------------
// The short sum over nontrivial zeros,
//
//   S = 2 sum_{0 < gamma <= H} 1 / (sqrt(1/4 + gamma^2) |zeta'(1/2 + i gamma)|),
//
// whose certified upper bound must come out below 2.4.  Each term gets an
// enclosure: a certified zeta' ball at the tabulated ordinate, widened by
// (table half-ulp) * (crude |zeta''| majorant) so the true ordinate anywhere
// within the table precision is covered, then a lower bound on the
// denominator turns into an upper bound on the term.
//
// Accumulation: fixed chunks of 64 terms summed in index order, then a
// pairwise tree over chunk totals.  The reduction shape depends only on the
// number of zeros, never on the thread count, so the result is byte-stable
// under --threads.
// ---------------------------------------------------------------------------

#include "mertens/f128.hpp"
#include "mertens/zeros.hpp"

namespace mertens {

struct ShortSumResult {
    Ball sum;                  // S with certified radius
    std::size_t zero_count = 0;
    f128 first_term = 0;       // term at the lowest ordinate (midpoint)
    f128 max_term = 0;
    f128 max_term_gamma = 0;
    f128 min_zeta_prime = 0;   // smallest |zeta'| midpoint encountered
    f128 min_zeta_prime_gamma = 0;
    f128 tail_fraction = 0;    // share of S carried by gamma in (H/2, H]
};

// gamma_max defaults to H.  `fast` switches the zeta' engine to double
// precision (looser radii; the 2.4 certificate still holds comfortably).
ShortSumResult short_sum(const ZerosTable& table, f128 gamma_max = 0,
                         bool fast = false);

}  // namespace mertens
