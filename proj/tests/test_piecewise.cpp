#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "util.hpp"

#include <cmath>
#include <stdexcept>

#include "mertens/bounds.hpp"
#include "mertens/piecewise.hpp"

using namespace mertens;

TEST_CASE("branch names round-trip") {
    for (Branch b : {Branch::const4, Branch::sqrt0571, Branch::linear4345,
                     Branch::ramare, Branch::classical, Branch::korobov,
                     Branch::linear160383}) {
        CHECK(parse_branch(branch_name(b)) == b);
    }
    CHECK(tu::contains(tu::thrown([] { parse_branch("cubic"); }),
                       "unknown branch name"));
}

TEST_CASE("branch selection across the stitch points") {
    CHECK(best_bound(f128(0)).branch == Branch::const4);
    CHECK(best_bound(logq(f128(32))).branch == Branch::const4);
    CHECK(best_bound(logq(f128(33))).branch == Branch::sqrt0571);
    CHECK(best_bound(16 * logq(f128(10))).branch == Branch::sqrt0571);
    CHECK(best_bound(f128(37)).branch == Branch::linear4345);
    CHECK(best_bound(parse_f128("45.123")).branch == Branch::linear4345);
    CHECK(best_bound(parse_f128("45.124")).branch == Branch::ramare);
    CHECK(best_bound(parse_f128("1772.504")).branch == Branch::ramare);
    CHECK(best_bound(parse_f128("1772.505")).branch == Branch::classical);
    CHECK(best_bound(expq(parse_f128("36.821"))).branch == Branch::classical);
    CHECK(best_bound(expq(f128(37))).branch == Branch::korobov);

    // The alternative chain swaps in x/160383 up to its own handoff.
    CHECK(best_bound(f128(40), true).branch == Branch::linear160383);
    CHECK(best_bound(f128(50), true).branch == Branch::linear160383);
    CHECK(best_bound(f128(1800), true).branch == Branch::linear160383);
    CHECK(best_bound(f128(1900), true).branch == Branch::classical);
    CHECK(best_bound(f128(1800)).branch == Branch::classical);

    CHECK(tu::contains(tu::thrown([] { best_bound(f128(-1)); }),
                       "requires x >= 1"));
}

TEST_CASE("branch values at spot points") {
    CHECK(best_bound(logq(f128(32))).value_or_inf() == 4);
    CHECK_NEAR(best_bound(logq(f128(33))).value_or_inf(),
               0.571 * std::sqrt(33.0), 1e-9);
    BestBound lin = best_bound(f128(40));
    CHECK_REL(lin.value_or_inf(), tu::d(expq(f128(40))) / 4345.0, 1e-12);
    BestBound ram = best_bound(f128(50));
    CHECK_REL(expq(ram.log_value - 50), 0.013 / 50 - 0.118 / 2500, 1e-9);
    BestBound dav = best_bound(f128(50), true);
    CHECK_REL(dav.value_or_inf(), tu::d(expq(f128(50))) / 160383.0, 1e-12);

    // Deep in the classical range the linear value overflows quad range.
    BestBound far = best_bound(f128(12000));
    CHECK(far.branch == Branch::classical);
    CHECK(isinfq(far.value_or_inf()));
    CHECK(far.log_value < f128(12000));

    // best_bound agrees with the standalone branch evaluator.
    const f128 at = parse_f128("1800");
    CHECK(fabsq(best_bound(at).log_value
                - (at + branch_rel_log(Branch::classical, at)))
          < f128(1e-30));
}

TEST_CASE("the classical branch re-derives its running constants") {
    const f128 L = parse_f128("1800");
    C1C2 c = c1_c2(L, num::Z1, parse_f128("3.422"), parse_f128("2.134"));
    CHECK(branch_rel_log(Branch::classical, L)
          == logq(c.c1) - c.c2 * sqrtq(L));
}

TEST_CASE("the 0.013/log x branch vanishes below log x ~ 9.08") {
    CHECK(tu::contains(tu::thrown([] { branch_rel_log(Branch::ramare, f128(9)); }),
                       "ramare branch undefined"));
    CHECK(branch_rel_log(Branch::ramare, parse_f128("9.1")) < 0);
}

TEST_CASE("the classical-to-strong handoff flips at loglog x = 36.821") {
    const f128 before = expq(parse_f128("36.820"));
    const f128 after = expq(parse_f128("36.821"));
    CHECK(branch_rel_log(Branch::classical, before)
          < branch_rel_log(Branch::korobov, before));
    CHECK(branch_rel_log(Branch::korobov, after)
          < branch_rel_log(Branch::classical, after));
}

TEST_CASE("crossover search reproduces the published breakpoints") {
    CHECK(std::fabs(find_crossover(Branch::ramare, Branch::linear4345, 36.0)
                    - 45.123) < 1e-9);
    CHECK(std::fabs(find_crossover(Branch::ramare, Branch::linear4345, 40.0)
                    - 45.123) < 1e-9);
    CHECK(std::fabs(find_crossover(Branch::classical, Branch::ramare, 363.11)
                    - 1772.504) < 1e-9);
    CHECK(std::fabs(find_crossover(Branch::classical, Branch::linear160383,
                                   363.11)
                    - 1806.498) < 1e-9);
}

TEST_CASE("sign margins flanking each breakpoint are comfortably wide") {
    auto diff = [](Branch a, Branch b, const char* at) {
        const f128 L = parse_f128(at);
        return branch_rel_log(a, L) - branch_rel_log(b, L);
    };
    CHECK_NEAR(diff(Branch::ramare, Branch::linear4345, "45.122"),
               5.54322e-6, 1e-10);
    CHECK_NEAR(diff(Branch::ramare, Branch::linear4345, "45.123"),
               -1.10379e-5, 1e-10);
    CHECK_NEAR(diff(Branch::classical, Branch::ramare, "1772.503"),
               2.31499e-6, 1e-10);
    CHECK_NEAR(diff(Branch::classical, Branch::ramare, "1772.504"),
               -1.76962e-6, 1e-10);
    CHECK_NEAR(diff(Branch::classical, Branch::linear160383, "1806.497"),
               3.06701e-6, 1e-10);
    CHECK_NEAR(diff(Branch::classical, Branch::linear160383, "1806.498"),
               -1.53782e-6, 1e-10);
}

TEST_CASE("crossover search rejects degenerate setups") {
    CHECK_THROWS_AS(
        find_crossover(Branch::ramare, Branch::linear4345, 36.0, 0.0),
        std::invalid_argument);
    CHECK_THROWS_AS(
        find_crossover(Branch::ramare, Branch::linear4345, 36.0, -0.001),
        std::invalid_argument);
    CHECK(tu::contains(
        tu::thrown([] { find_crossover(Branch::ramare, Branch::linear4345, 46.0); }),
        "must start at or above"));
    CHECK(tu::contains(
        tu::thrown([] {
            find_crossover(Branch::ramare, Branch::ramare, 50.0, 0.001, 60.0);
        }),
        "no crossover found before the cap"));
    // x/4345 never drops below 0.571 sqrt(x): the walk exhausts the cap.
    CHECK(tu::contains(
        tu::thrown([] {
            find_crossover(Branch::linear4345, Branch::sqrt0571, 36.0, 0.001,
                           100.0);
        }),
        "no crossover found before the cap"));
}

TEST_CASE("u(x) majorizes the running c1 over the classical range") {
    UMajorizeReport r = verify_u_majorizes(1000);
    CHECK(r.pass);
    CHECK(r.grid_points == 1000);
    CHECK_NEAR(r.min_slack, 0.56142277, 1e-6);
    CHECK_NEAR(r.argmin_llx, 36.821, 1e-9);
    CHECK_THROWS_AS(verify_u_majorizes(999), std::invalid_argument);
}

TEST_CASE("range assertions on c1..c4 hold with the frozen margins") {
    RangeReport r = range_assertions(1000);
    CHECK(r.pass);
    CHECK(r.grid_points == 1000);
    REQUIRE(r.checks.size() == 6);

    const char* names[6] = {"c1 > 0.09797", "c1 < 0.23427", "c2 > 0.24647",
                            "c2 < 0.42415", "c3 < 5.09591", "c4 > 0.02196"};
    const double margins[6] = {7.83697e-6, 1.2343e-6, 3.3709e-6,
                               5.9757e-6,  2.996e-6,  5.8571e-7};
    const double worsts[6] = {36.821, 7.4801485, 7.4801485,
                              36.821, 36.821,    36.821};
    for (int i = 0; i < 6; ++i) {
        INFO("check ", names[i]);
        CHECK(r.checks[i].name == names[i]);
        CHECK(r.checks[i].pass);
        CHECK_NEAR(r.checks[i].margin, margins[i], 2e-9);
        CHECK_NEAR(r.checks[i].worst_llx, worsts[i], 1e-6);
    }
    CHECK_THROWS_AS(range_assertions(1), std::invalid_argument);
}
