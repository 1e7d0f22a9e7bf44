#pragma once

// ---------------------------------------------------------------------------
// The final piecewise bound on |M(x)|: six branches stitched at published
// breakpoints, the 0.001-step crossover search that produced those
// breakpoints, the u(x) majorant check, and the range assertions on
// c1..c4 over their active branches.
//
// Everything runs in log x (the last branch activates above x = exp(e^36.8),
// far past any float), with bounds reported as logs.
// ---------------------------------------------------------------------------

#include <string>
#include <vector>

#include "mertens/f128.hpp"

namespace mertens {

enum class Branch {
    const4,        // |M| <= 4 on 1 <= x <= 32
    sqrt0571,      // 0.571 sqrt(x) up to 1e16
    linear4345,    // x/4345
    ramare,        // 0.013 x/log x - 0.118 x/(log x)^2
    classical,     // c1(x) x exp(-c2(x) sqrt(log x))
    korobov,       // c3(x) x exp(-c4(x) (log x)^{3/5} (loglog x)^{-1/5})
    linear160383,  // x/160383, the alternative third branch
};

const char* branch_name(Branch b);
Branch parse_branch(const std::string& name);  // throws on unknown name

struct BestBound {
    Branch branch;
    f128 log_value;
    // Linear-scale value, infinite when it overflows quad range.
    f128 value_or_inf() const;
};

// The active branch and its value at x.  With daval set, x/160383 replaces
// both the x/4345 and the 0.013/log x branches, and the classical branch
// starts at e^1806.498 instead of e^1772.504.
BestBound best_bound(f128 log_x, bool daval = false);

// Value of one branch's bound at x, as log(bound) - log x, ignoring which
// branch is active there.  Used by the crossover search.
f128 branch_rel_log(Branch b, f128 log_x);

// Walks log x over the grid start + k*step (k = 1, 2, ...) and returns the
// first grid point where branch a's value is strictly below branch b's,
// both recomputed fresh at every step.  This reproduces the published
// third-decimal breakpoints exactly.  Throws if no crossover occurs by
// log_cap.  The comparator runs in double: the sign margins at the grid
// points flanking each published crossover are at least 1.5e-6, eleven
// orders above double rounding error.
double find_crossover(Branch a, Branch b, double log_start,
                      double step = 0.001, double log_cap = 2000.0);

struct UMajorizeReport {
    bool pass;
    f128 min_slack;    // min of u(x) - c1(x) over the grid
    f128 argmin_llx;   // loglog x where the minimum is attained
    int grid_points;
};
// Checks c1(x) <= u(x), u(x) = 0.09798 + (0.0055 + 20.8944 e^{-0.4037/llx})/llx,
// on a log-spaced grid over loglog x in [7.480, 36.821].  grid_points >= 1000.
UMajorizeReport verify_u_majorizes(int grid_points);

struct RangeCheck {
    std::string name;  // e.g. "c1 < 0.23427"
    f128 margin;       // worst slack toward the stated inequality (> 0 passes)
    f128 worst_llx;
    bool pass;
};
struct RangeReport {
    bool pass;
    std::vector<RangeCheck> checks;
    int grid_points;
};
// Sweeps c1, c2 over the classical branch range and c3, c4 over the last
// branch's opening range, confirming
//   0.09797 < c1 < 0.23427, 0.24647 < c2 < 0.42415,
//   c3 < 5.09591, c4 > 0.02196.
RangeReport range_assertions(int grid_points = 1000);

}  // namespace mertens
