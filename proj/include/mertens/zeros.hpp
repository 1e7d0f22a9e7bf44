#pragma once

// ---------------------------------------------------------------------------
// Table of nontrivial-zero ordinates on the critical line.
//
// File format: one positive ordinate per line, plain decimal, ascending;
// blank lines ignored.  The shipped table (data/zeros2750.txt) carries nine
// decimals, so a tabulated value differs from the true ordinate by at most
// half an ulp of the table, 5e-10; that uncertainty is what the short-sum
// certificate propagates.  Parsing goes through strtoflt128, so the decimal
// string is converted with at most one f128 rounding and no intermediate
// double round-trip.
//
// Sanity checks offered: zero counts against the Riemann-von Mangoldt main
// term N(T) ~ (T/2pi) log(T/2pi) - T/2pi + 7/8 (within +-2 over the table's
// range) and a minimum-gap floor that catches duplicated or truncated lines.
// ---------------------------------------------------------------------------

#include "mertens/f128.hpp"

#include <string>
#include <vector>

namespace mertens {

struct ZerosTable {
    std::vector<f128> gamma;  // ascending ordinates
    double precision = 1e-9;  // table ulp; half of it bounds the ordinate error

    std::size_t count_below(f128 T) const;
};

ZerosTable load_zeros(const std::string& path, f128 gamma_max = 0);

// Riemann-von Mangoldt main term for the number of zeros with 0 < gamma <= T.
f128 rvm_main_term(f128 T);

struct CountCheck {
    std::size_t count = 0;
    f128 expected = 0;   // main term
    f128 deviation = 0;  // count - expected
    f128 min_gap = 0;    // over consecutive ordinates <= T
    bool count_ok = false;    // |deviation| <= 2
    bool min_gap_ok = false;  // min_gap > 1e-2
};

CountCheck count_check(const ZerosTable& table, f128 T);

}  // namespace mertens
