#include "mertens/quadrature.hpp"

#include "mertens/zeta.hpp"

#include <cmath>
#include <vector>

namespace mertens {

namespace {

// 7-15 Gauss-Kronrod pair (positive abscissae; the rule is symmetric),
// carried to 36 digits so that a single panel reproduces polynomials
// through the rule's degree at working precision.  Any transcription slip
// breaks the one-panel exactness unit test.
struct Rule15 {
    f128 xgk[8];
    f128 wgk[8];
    f128 wg[4];
    double wgk_d[8];  // for the radius tally, which stays in double
};

const Rule15& rule15() {
    static const Rule15 rule = [] {
        static const char* const xgk[8] = {
            "0.991455371120812639206854697526328517",
            "0.949107912342758524526189684047851262",
            "0.864864423359769072789712788640926201",
            "0.741531185599394439863864773280788407",
            "0.586087235467691130294144838258729598",
            "0.405845151377397166906606412076961463",
            "0.207784955007898467600689403773244913",
            "0.0"};
        static const char* const wgk[8] = {
            "0.0229353220105292249637320080589695920",
            "0.0630920926299785532907006631892042867",
            "0.104790010322250183839876322541518017",
            "0.140653259715525918745189590510237920",
            "0.169004726639267902826583426598550284",
            "0.190350578064785409913256402421013683",
            "0.204432940075298892414161999234649085",
            "0.209482141084727828012999174891714264"};
        static const char* const wg[4] = {
            "0.129484966168869693270611432679082018",
            "0.279705391489276667901467771423779582",
            "0.381830050505118944950369775488975134",
            "0.417959183673469387755102040816326531"};
        Rule15 out;
        for (int i = 0; i < 8; ++i) {
            out.xgk[i] = parse_f128(xgk[i]);
            out.wgk[i] = parse_f128(wgk[i]);
            out.wgk_d[i] = (double)out.wgk[i];
        }
        for (int i = 0; i < 4; ++i) out.wg[i] = parse_f128(wg[i]);
        return out;
    }();
    return rule;
}

struct PanelOut {
    Ball k15;          // Kronrod value with node radii folded in
    double trunc_err;  // QUADPACK-style truncation estimate
    int evals;
};

PanelOut eval_panel(const BallFn& f, f128 a, f128 b) {
    const Rule15& r = rule15();
    const f128 c = (a + b) / 2;
    const f128 h = (b - a) / 2;

    f128 k15 = 0, g7 = 0;
    double node_rad = 0;
    int evals = 0;

    // center node (Kronrod index 7, also Gauss node)
    {
        Ball fc = f(c);
        k15 += r.wgk[7] * fc.mid;
        g7 += r.wg[3] * fc.mid;
        node_rad += r.wgk_d[7] * fc.rad;
        ++evals;
    }
    for (int i = 0; i < 7; ++i) {
        const f128 dx = h * r.xgk[i];
        Ball fl = f(c - dx);
        Ball fr = f(c + dx);
        k15 += r.wgk[i] * (fl.mid + fr.mid);
        node_rad += r.wgk_d[i] * (fl.rad + fr.rad);
        if (i % 2 == 1) {  // odd Kronrod indices are the Gauss-7 nodes
            g7 += r.wg[i / 2] * (fl.mid + fr.mid);
        }
        evals += 2;
    }

    const double hd = (double)h;
    double diff = std::fabs((double)(h * (k15 - g7)));
    double est = std::min(diff, std::pow(200.0 * diff, 1.5));

    PanelOut out;
    out.k15 = Ball(h * k15, hd * node_rad + ball_bump(h * k15) * 32);
    out.trunc_err = est;
    out.evals = evals;
    return out;
}

}  // namespace

QuadResult integrate(const BallFn& f, f128 a, f128 b, double abs_tol,
                     double rel_tol, int max_depth) {
    // First pass over the whole interval fixes the tolerance scale; panels
    // then receive a share proportional to their length.  Splitting is
    // depth-first, left child first: the accumulation order is a function
    // of the integrand alone, so results are bit-reproducible.
    PanelOut root = eval_panel(f, a, b);
    const double scale =
        abs_tol + rel_tol * std::fabs((double)root.k15.mid);
    const double total_len = std::fabs((double)(b - a));

    struct Item {
        f128 a, b;
        int depth;
    };
    std::vector<Item> stack;
    stack.push_back({a, b, 0});

    QuadResult res;
    res.value = Ball(0, 0);

    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        PanelOut p = eval_panel(f, it.a, it.b);
        res.evaluations += p.evals;
        const double share =
            scale * std::fabs((double)(it.b - it.a)) / total_len;
        if (p.trunc_err <= share || it.depth >= max_depth) {
            Ball contrib = p.k15;
            contrib.rad += p.trunc_err;  // honest even on depth bailout
            res.value = ball_add(res.value, contrib);
            res.panels += 1;
        } else {
            const f128 m = (it.a + it.b) / 2;
            stack.push_back({m, it.b, it.depth + 1});
            stack.push_back({it.a, m, it.depth + 1});  // popped first
        }
    }
    return res;
}

Ball i4_constant() {
    // Integrand sqrt(9 pi^2/16 + pi^2 t^2/4) / (1/4 + t^2), even in t, so
    // integrate [0, H] and double.
    const f128 pi2 = num::pi * num::pi;
    const f128 c0 = 9 * pi2 / 16;
    const f128 c1 = pi2 / 4;
    BallFn f = [&](f128 t) {
        f128 v = sqrtq(c0 + c1 * t * t) / (f128(1) / 4 + t * t);
        return Ball(v, ball_bump(v) * 8);
    };
    QuadResult half = integrate(f, 0, num::H, 4e-10, 0.0);
    const f128 prefactor =
        parse_f128("0.28861") * sqrtq(32 / num::pi) * (f128(6) / 5);
    return ball_scale(half.value, 2 * prefactor);
}

Ball i3_i5_constant() {
    // (1/pi) Int_{-1/2}^{1} dy / (sqrt(y^2 + H^2) |zeta(y + iH)|).
    // |zeta| along this segment stays above 3, so the reciprocal is tame;
    // each node carries a certified zeta enclosure.
    BallFn f = [](f128 y) {
        CBall z = zeta(y, num::H, 1e-9);
        Ball zabs = cball_abs(z);
        f128 w = sqrtq(y * y + num::H * num::H);
        Ball denom = ball_scale(zabs, w);
        return ball_recip(denom);
    };
    QuadResult q = integrate(f, -parse_f128("0.5"), 1, 1e-12, 0.0);
    return ball_scale(q.value, 1 / num::pi);
}

}  // namespace mertens
