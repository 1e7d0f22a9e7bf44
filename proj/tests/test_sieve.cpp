#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "util.hpp"

#include <cstdint>

#include <omp.h>

#include "mertens/sieve.hpp"

using namespace mertens;

namespace {

long long window_sum(std::uint64_t lo_exclusive, std::uint64_t hi) {
    std::vector<std::int8_t> mu = mobius_range(lo_exclusive + 1, hi);
    long long s = 0;
    for (std::int8_t v : mu) s += v;
    return s;
}

}  // namespace

TEST_CASE("mobius values on small integers") {
    const std::vector<std::int8_t> want = {1,  -1, -1, 0, -1, 1,  -1, 0, 0, 1,
                                           -1, 0,  -1, 1, 1,  0,  -1, 0, -1, 0};
    std::vector<std::int8_t> got = mobius_range(1, 20);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        INFO("n = ", i + 1);
        CHECK(got[i] == want[i]);
    }
    CHECK(mobius_range(30, 30)[0] == -1);
    CHECK(mobius_range(12, 12)[0] == 0);
}

TEST_CASE("mobius windows high above the segment boundary") {
    // Window sums over (lo, hi]; reference values from an independent
    // factorization pass.
    CHECK(window_sum(2273360, 6992150) == 26);
    CHECK(window_sum(3167584, 7886470) == 8);
    CHECK(window_sum(2041769, 7973654) == 172);
    CHECK(window_sum(6426836, 6762547) == -447);
    CHECK(window_sum(3911096, 9884564) == 554);
}

TEST_CASE("Mertens point values at and below one million") {
    struct Point {
        std::uint64_t x;
        long long m;
    };
    const Point pts[] = {
        {1, 1},      {2, 0},        {10, -1},     {31, -4},
        {32, -4},    {33, -3},      {39, 0},      {100, 1},
        {1000, 2},   {10000, -23},  {100000, -48}, {123456, 45},
        {1000000, 212},
    };
    for (const Point& p : pts) {
        INFO("x = ", p.x);
        CHECK(mertens::mertens(p.x) == p.m);
    }
}

TEST_CASE("a full scan to 1e7 reproduces every reference statistic") {
    MertensScan s = mertens_scan(10000000ull, 1000000ull);
    CHECK(s.xmax == 10000000ull);
    CHECK(s.m_at_xmax == 1037);
    CHECK(s.max_abs_m_small == 4);
    CHECK(s.argmax_abs_small == 31);
    CHECK(s.sqrt_bound_ok);
    CHECK(s.argmax_ratio == 199);
    CHECK(std::fabs(s.max_ratio - 0.567105) < 5e-7);
    CHECK(s.max_ratio < 0.571);

    REQUIRE(s.checkpoints.size() == 10);
    CHECK(s.checkpoints[0].first == 1000000ull);
    CHECK(s.checkpoints[0].second == 212);
    CHECK(s.checkpoints[1].second == -247);
    CHECK(s.checkpoints[4].second == -709);
    CHECK(s.checkpoints[9].second == 1037);

    CHECK(mertens::mertens(9999991) == 1034);
}

TEST_CASE("serial and parallel scans agree field for field") {
    for (std::uint64_t xmax :
         {std::uint64_t(1), std::uint64_t(32), std::uint64_t(33),
          std::uint64_t(1000), std::uint64_t(1048593),
          std::uint64_t(3333333)}) {
        INFO("xmax = ", xmax);
        MertensScan a = mertens_scan(xmax, 100000, false);
        MertensScan b = mertens_scan(xmax, 100000, true);
        CHECK(a.m_at_xmax == b.m_at_xmax);
        CHECK(a.max_abs_m == b.max_abs_m);
        CHECK(a.argmax_abs == b.argmax_abs);
        CHECK(a.max_abs_m_small == b.max_abs_m_small);
        CHECK(a.argmax_abs_small == b.argmax_abs_small);
        CHECK(a.max_ratio == b.max_ratio);
        CHECK(a.argmax_ratio == b.argmax_ratio);
        CHECK(a.sqrt_bound_ok == b.sqrt_bound_ok);
        CHECK(a.checkpoints == b.checkpoints);
    }
}

TEST_CASE("results do not depend on the thread count") {
    omp_set_num_threads(3);
    MertensScan three = mertens_scan(2000000ull, 500000ull);
    omp_set_num_threads(1);
    MertensScan one = mertens_scan(2000000ull, 500000ull);
    omp_set_num_threads(omp_get_num_procs());
    CHECK(three.m_at_xmax == one.m_at_xmax);
    CHECK(three.max_abs_m == one.max_abs_m);
    CHECK(three.max_ratio == one.max_ratio);
    CHECK(three.checkpoints == one.checkpoints);
    CHECK(one.checkpoints.back().second == -247);
}

TEST_CASE("degenerate inputs") {
    CHECK(mertens::mertens(1) == 1);
    MertensScan tiny = mertens_scan(1, 0);
    CHECK(tiny.m_at_xmax == 1);
    CHECK(tiny.checkpoints.empty());
    CHECK(tiny.sqrt_bound_ok);  // vacuous below 33
    CHECK(tiny.max_ratio == 0.0);

    MertensScan small = mertens_scan(32, 0);
    CHECK(small.max_abs_m_small == 4);
    CHECK(small.max_ratio == 0.0);  // the ratio scan starts at 33

    CHECK(tu::thrown([] { mertens_scan(0, 0); }) != "");
    CHECK(tu::thrown([] { mobius_range(5, 4); }) != "");
    CHECK(tu::thrown([] { mobius_range(0, 4); }) != "");
    CHECK(mobius_range(1, 1).size() == 1);
    CHECK(mobius_range(1, 1)[0] == 1);
}
