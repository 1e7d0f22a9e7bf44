#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "util.hpp"

#include <cmath>

#include <omp.h>

#include "mertens/shortsum.hpp"

using namespace mertens;

namespace {

const ZerosTable& table() {
    static ZerosTable t = load_zeros(tu::zeros_path());
    return t;
}

}  // namespace

TEST_CASE("the certified sum over all zeros up to H") {
    ShortSumResult r = short_sum(table());
    CHECK(r.zero_count == 2702);
    CHECK_NEAR(r.sum.mid, 2.38892238222, 2e-9);
    CHECK(r.sum.rad > 0);
    CHECK(r.sum.rad < 5e-3);
    CHECK(tu::d(r.sum.upper()) <= 2.4);

    CHECK_NEAR(r.first_term, 0.1782830428, 1e-8);
    CHECK(r.max_term == r.first_term);  // the lowest zero dominates
    CHECK(fabsq(r.max_term_gamma - table().gamma[0]) < f128(1e-20));
    CHECK_NEAR(r.min_zeta_prime, 0.6175264, 1e-6);
    CHECK_NEAR(r.min_zeta_prime_gamma, 1329.20501878, 1e-8);
    CHECK_NEAR(r.tail_fraction, 0.14249492, 1e-6);
}

TEST_CASE("prefix sums over the first one and two zeros") {
    ShortSumResult one = short_sum(table(), f128(15));
    CHECK(one.zero_count == 1);
    CHECK_NEAR(one.sum.mid, 0.1782830428, 1e-8);
    CHECK(one.first_term == one.max_term);

    ShortSumResult two = short_sum(table(), parse_f128("21.1"));
    CHECK(two.zero_count == 2);
    CHECK_NEAR(two.sum.mid, 0.2619460235, 1e-8);
}

TEST_CASE("the fast engine lands within a micro of the certified one") {
    ShortSumResult fast = short_sum(table(), 0, true);
    CHECK(fast.zero_count == 2702);
    CHECK_NEAR(fast.sum.mid, 2.38892238222, 1e-6);
    CHECK(tu::d(fast.sum.upper()) <= 2.4);
    CHECK_NEAR(fast.min_zeta_prime, 0.6175264, 1e-5);
}

TEST_CASE("the reduction is bit-stable across thread counts") {
    omp_set_num_threads(1);
    ShortSumResult one = short_sum(table(), f128(500), true);
    omp_set_num_threads(3);
    ShortSumResult three = short_sum(table(), f128(500), true);
    omp_set_num_threads(omp_get_num_procs());
    CHECK(one.sum.mid == three.sum.mid);
    CHECK(one.sum.rad == three.sum.rad);
    CHECK(one.min_zeta_prime == three.min_zeta_prime);
    CHECK(one.tail_fraction == three.tail_fraction);

    // Same invariance for the certified engine on a smaller prefix.
    omp_set_num_threads(1);
    ShortSumResult q1 = short_sum(table(), f128(100));
    omp_set_num_threads(3);
    ShortSumResult q3 = short_sum(table(), f128(100));
    omp_set_num_threads(omp_get_num_procs());
    CHECK(q1.sum.mid == q3.sum.mid);
    CHECK(q1.sum.rad == q3.sum.rad);
}

TEST_CASE("quad and fast engines agree on a prefix") {
    ShortSumResult q = short_sum(table(), f128(100));
    ShortSumResult f = short_sum(table(), f128(100), true);
    CHECK(q.zero_count == 29);
    CHECK(f.zero_count == 29);
    CHECK(std::fabs(tu::d(q.sum.mid) - tu::d(f.sum.mid)) < 1e-8);
    // The certified radius must cover the fast midpoint too.
    CHECK(fabsq(q.sum.mid - f.sum.mid) < f128(q.sum.rad) + f128(f.sum.rad));
}

TEST_CASE("below the first zero there is nothing to sum") {
    CHECK(tu::contains(tu::thrown([] { short_sum(table(), f128(10)); }),
                       "no zeros"));
}
