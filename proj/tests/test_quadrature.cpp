#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "util.hpp"

#include <cmath>

#include "mertens/quadrature.hpp"

using namespace mertens;

namespace {
Ball exact_fn(f128 v) { return Ball(v, ball_bump(v)); }
}  // namespace

TEST_CASE("low-degree polynomials integrate exactly in one panel") {
    for (int k = 0; k <= 10; ++k) {
        QuadResult q = integrate(
            [k](f128 x) {
                f128 v = 1;
                for (int i = 0; i < k; ++i) v *= x;
                return exact_fn(v);
            },
            0, 1, 1e-20, 0.0);
        const f128 want = f128(1) / (k + 1);
        INFO("k = ", k);
        CHECK(q.panels == 1);
        CHECK(fabsq(q.value.mid - want) < f128(1e-30));
        CHECK(q.value.rad < 1e-20);
    }
}

TEST_CASE("smooth transcendental integrals converge to tight enclosures") {
    QuadResult s = integrate([](f128 x) { return exact_fn(sinq(x)); },
                             0, num::pi, 1e-20, 0.0);
    CHECK(fabsq(s.value.mid - 2) < f128(1e-20));
    CHECK(s.value.rad < 1e-18);
    CHECK(s.panels >= 1);
    CHECK(s.evaluations >= 15 * s.panels);

    // Runge's function needs subdivision; reference is (2/5) atan(5).
    QuadResult r = integrate(
        [](f128 x) { return exact_fn(1 / (1 + 25 * x * x)); },
        -1, 1, 1e-24, 0.0);
    const f128 want = 2 * atanq(f128(5)) / 5;
    CHECK(r.panels > 1);
    CHECK(fabsq(r.value.mid - want) < f128(1e-22));
}

TEST_CASE("integrand radii propagate through the weighted sum") {
    QuadResult q = integrate([](f128) { return Ball(f128(1), 1e-6); },
                             0, 2, 0.0, 1e-12);
    CHECK(fabsq(q.value.mid - 2) < f128(1e-25));
    CHECK(q.value.rad >= 2e-6);
    CHECK(q.value.rad <= 2.1e-6);
}

TEST_CASE("the first contour constant stays below 41.155") {
    Ball i4 = i4_constant();
    CHECK_NEAR(i4.mid, 41.1545847528, 1e-8);
    CHECK(i4.rad > 0);
    CHECK(i4.rad < 2e-9);
    CHECK(tu::d(i4.upper()) <= 41.155);
    const double slack = 41.155 - tu::d(i4.upper());
    INFO("slack = ", slack);
    CHECK(slack > 3e-4);
}

TEST_CASE("the second contour constant stays below 1.26e-5") {
    Ball v = i3_i5_constant();
    CHECK_REL(v.mid, 1.25703965028e-5, 1e-9);
    CHECK(v.rad > 0);
    CHECK(v.rad < 2e-12);
    CHECK(tu::d(v.upper()) <= 1.26e-5);
    const double slack = 1.26e-5 - tu::d(v.upper());
    INFO("slack = ", slack);
    CHECK(slack > 2.9e-8);
}

TEST_CASE("contour constants are bit-for-bit reproducible") {
    Ball a = i4_constant();
    Ball b = i4_constant();
    CHECK(a.mid == b.mid);
    CHECK(a.rad == b.rad);

    Ball c = i3_i5_constant();
    Ball d2 = i3_i5_constant();
    CHECK(c.mid == d2.mid);
    CHECK(c.rad == d2.rad);
}
