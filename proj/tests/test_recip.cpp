#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "util.hpp"

#include <cmath>

#include <omp.h>

#include "mertens/recip.hpp"

using namespace mertens;

TEST_CASE("the published R1 table, lookup only") {
    std::size_t n = 0;
    const R1Entry* t = r1_table_entries(&n);
    REQUIRE(n == 10);
    const double want_values[10] = {8.101, 4.339, 3.632, 3.422, 3.264,
                                    3.021, 2.711, 2.518, 2.307, 2.134};
    const char* want_labels[10] = {"10",   "10^2", "10^3", "H",    "10^4",
                                   "10^5", "10^7", "10^9", "Hhat", "e^40"};
    for (std::size_t i = 0; i < n; ++i) {
        INFO("entry ", i);
        CHECK(t[i].value == want_values[i]);
        CHECK(std::string(t[i].label) == want_labels[i]);
        if (i > 0) CHECK(t[i].log_t0 > t[i - 1].log_t0);
        if (i > 0) CHECK(t[i].value < t[i - 1].value);
    }

    CHECK(tu::d(r1_lookup(num::Z1, logq(f128(10)))) == 8.101);
    CHECK(tu::d(r1_lookup(num::Z1, num::log_H)) == 3.422);
    CHECK(tu::d(r1_lookup(num::Z1, num::log_Hhat)) == 2.307);
    CHECK(tu::d(r1_lookup(num::Z1, f128(40))) == 2.134);
    // Slightly perturbed heights still match (1e-9 relative tolerance).
    CHECK(tu::d(r1_lookup(num::Z1, f128(40) * (1 + f128(1e-10)))) == 2.134);

    CHECK(tu::contains(
        tu::thrown([] { r1_lookup(f128(5.0), f128(40)); }), "only W = Z1"));
    CHECK(tu::contains(
        tu::thrown([] { r1_lookup(num::Z1, logq(f128(1e6))); }),
        "no interpolation"));
}

TEST_CASE("the height-dependent envelope constant a0") {
    CHECK_NEAR(a0_constant(num::e), 60.8300946534, 1e-9);
    CHECK_NEAR(a0_constant(f128(3)), 59.620833898, 1e-8);
    CHECK_NEAR(a0_constant(f128(10)), 58.0960010538, 1e-9);
    CHECK_NEAR(a0_constant(f128(60)), 58.096, 1e-10);
    // Decreasing, and never above the cap quoted in the interface.
    CHECK(a0_constant(num::e) > a0_constant(f128(3)));
    CHECK(a0_constant(f128(3)) > a0_constant(f128(10)));
    CHECK(a0_constant(f128(10)) > a0_constant(f128(60)));
    CHECK(tu::d(a0_constant(num::e)) <= 60.8301);
    CHECK(tu::contains(tu::thrown([] { a0_constant(f128(2.5)); }),
                       "log t0 >= e"));
}

TEST_CASE("the (A, B) growth envelope") {
    ABOmega flat = a_b_omega(0, f128(10));
    CHECK(flat.A == a0_constant(f128(10)));
    CHECK(flat.B == f128(2) / 3);

    ABOmega mid = a_b_omega(parse_f128("0.5"), f128(10));
    CHECK(mid.A == parse_f128("70.6995"));
    CHECK_NEAR(mid.B, 2.23571893645, 1e-9);

    ABOmega steep = a_b_omega(parse_f128("0.92377"), num::log_Hhat);
    CHECK_NEAR(steep.B, 4.60695666405, 1e-9);

    CHECK(tu::contains(tu::thrown([] { a_b_omega(f128(-0.1), f128(10)); }),
                       "nonnegative"));
    CHECK(tu::contains(tu::thrown([] { a_b_omega(f128(0.98), f128(10)); }),
                       "omega cap"));
    // The cap itself is admissible.
    CHECK(tu::thrown([] { a_b_omega(num::omega_cap, f128(10)); }) == "");
}

TEST_CASE("the height-shift term R_max") {
    CHECK_NEAR(r3_rmax(num::omega_cap, num::log_Hhat), 0.232805661927, 1e-9);
    CHECK(r3_rmax(0, num::log_Hhat) == 0);
    // Decays with height at fixed omega.
    CHECK(r3_rmax(f128(0.9), f128(100)) < r3_rmax(f128(0.9), num::log_Hhat));
}

TEST_CASE("closed-form R3 at the four published parameter rows") {
    R3Params p;
    p.d = 1 / num::Z3;
    p.d1 = parse_f128("0.09172");
    p.omega = parse_f128("0.92377");
    p.log_t0 = num::log_Hhat;
    CHECK_REL(r3_formula(p), 40.942194919588, 1e-10);

    p.d1 = parse_f128("0.11335");
    p.omega = parse_f128("0.60942");
    p.log_t0 = parse_f128("72775.43");
    CHECK_REL(r3_formula(p), 33.819908557619, 1e-10);

    p.d = f128(1) / 54;
    p.d1 = parse_f128("0.09172");
    p.omega = parse_f128("0.92377");
    p.log_t0 = num::log_Hhat;
    CHECK_REL(r3_formula(p), 40.940891517793, 1e-10);

    p.d = f128(1) / 100;
    p.d1 = parse_f128("0.09198");
    p.omega = parse_f128("0.91867");
    CHECK_REL(r3_formula(p), 38.108684521408, 1e-10);
}

TEST_CASE("each feasibility condition reports its own name") {
    R3Params p;
    p.d = 1 / num::Z3;
    p.d1 = parse_f128("0.09");
    p.omega = parse_f128("0.98");  // above e^{2/3}/2
    p.log_t0 = num::log_Hhat;
    CHECK(tu::contains(tu::thrown([&] { r3_check_feasible(p); }),
                       "omega cap"));

    p.omega = parse_f128("0.9");
    p.d = f128(1) / 50;  // wider than the region the growth lemma covers
    CHECK(tu::contains(tu::thrown([&] { r3_check_feasible(p); }), "width"));

    p.d = 1 / num::Z3;
    p.omega = parse_f128("0.005");  // below d/loglog t0
    CHECK(tu::contains(tu::thrown([&] { r3_check_feasible(p); }),
                       "omega floor"));

    p.omega = parse_f128("0.92");
    p.d1 = f128(30);  // beyond (2 - R_max) g(log t0)
    CHECK(tu::contains(tu::thrown([&] { r3_check_feasible(p); }),
                       "d1 ceiling"));

    p.d1 = 0;
    CHECK(tu::contains(tu::thrown([&] { r3_check_feasible(p); }),
                       "d1 must be positive"));

    p.d1 = parse_f128("0.09");
    p.log_t0 = f128(20);  // below the verified-RH height
    CHECK(tu::contains(tu::thrown([&] { r3_check_feasible(p); }),
                       "log t0 must be at least"));

    // The boundary case d = 1/Z3 itself is feasible (checked with slack).
    p.log_t0 = num::log_Hhat;
    p.d1 = parse_f128("0.09172");
    p.omega = parse_f128("0.92377");
    CHECK(tu::thrown([&] { r3_check_feasible(p); }) == "");
}

TEST_CASE("the optimizer reproduces the published optimum at Hhat") {
    R3Optimum o = optimize_r3(num::Z3, num::log_Hhat);
    CHECK_REL(o.value, 40.9421949148889, 1e-8);
    CHECK_NEAR(o.params.d1, 0.0917184260243, 1e-5);
    CHECK_NEAR(o.params.omega, 0.92376594781, 1e-5);
    CHECK(tu::d(o.value) <= 40.944);
    CHECK(o.value <= o.grid_best);
    CHECK(tu::d(o.grid_best) < 41.0);
    // Published three-decimal value rounds from this optimum.
    CHECK(std::fabs(tu::d(o.value) - 40.942) < 5e-4);
    // The optimizer cannot beat the true minimum.
    CHECK(tu::d(o.value) >= 40.9421949148 * (1 - 1e-9));
    // Re-evaluating the formula at the reported point gives the same value.
    CHECK(r3_formula(o.params) == o.value);
}

TEST_CASE("optima at other widths and heights") {
    R3Optimum w54 = optimize_r3(f128(54), num::log_Hhat);
    CHECK_NEAR(w54.value, 40.94089151, 1e-6);
    CHECK_NEAR(w54.params.d1, 0.091718538, 1e-5);
    CHECK_NEAR(w54.params.omega, 0.92376369, 1e-5);

    R3Optimum w100 = optimize_r3(f128(100), num::log_Hhat);
    CHECK_NEAR(w100.value, 38.1086844, 1e-6);
    CHECK_NEAR(w100.params.d1, 0.091971673, 1e-5);
    CHECK_NEAR(w100.params.omega, 0.91866652, 1e-5);

    R3Optimum h100 = optimize_r3(num::Z3, f128(100));
    CHECK_REL(h100.value, 38.4137056153519, 1e-8);
    R3Optimum h1000 = optimize_r3(num::Z3, f128(1000));
    CHECK_REL(h1000.value, 35.9386980557709, 1e-8);
    // The constant improves as the starting height grows.
    CHECK(h100.value < optimize_r3(num::Z3, num::log_Hhat).value);
    CHECK(h1000.value < h100.value);
}

TEST_CASE("the one-line specialization d = 0") {
    R3Optimum o = r3_one_line(num::log_Hhat);
    CHECK(o.params.d == 0);
    CHECK_REL(o.value, 35.0497901333868, 1e-8);
    CHECK_NEAR(o.params.d1, 0.0922706255647, 1e-5);
    CHECK_NEAR(o.params.omega, 0.912700779545, 1e-5);
    // Dropping the width requirement can only help.
    CHECK(o.value < optimize_r3(num::Z3, num::log_Hhat).value);

    CHECK_NEAR(r3_one_line(f128(100)).value, 33.229395, 1e-5);
    CHECK_NEAR(r3_one_line(f128(1000)).value, 31.425674, 1e-5);
}

TEST_CASE("optimizer argument guards") {
    CHECK(tu::contains(tu::thrown([] { optimize_r3(f128(50), num::log_Hhat); }),
                       "W3 must be at least Z3"));
    CHECK(tu::contains(tu::thrown([] { optimize_r3(num::Z3, f128(20)); }),
                       "log t0 must be at least"));
    CHECK(tu::contains(tu::thrown([] { r3_one_line(f128(20)); }),
                       "log t0 must be at least"));
}

TEST_CASE("optimization is deterministic and thread-invariant") {
    omp_set_num_threads(3);
    R3Optimum a = optimize_r3(num::Z3, num::log_Hhat);
    omp_set_num_threads(1);
    R3Optimum b = optimize_r3(num::Z3, num::log_Hhat);
    omp_set_num_threads(omp_get_num_procs());
    R3Optimum c = optimize_r3(num::Z3, num::log_Hhat);
    CHECK(a.value == b.value);
    CHECK(a.value == c.value);
    CHECK(a.grid_best == b.grid_best);
    CHECK(a.params.d1 == b.params.d1);
    CHECK(a.params.omega == b.params.omega);
}
