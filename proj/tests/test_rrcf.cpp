#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sextic/elliptic.hpp"
#include "sextic/jinv.hpp"
#include "sextic/rrcf.hpp"
#include "test_util.hpp"

using namespace sextic;
using boost::multiprecision::exp;
using boost::multiprecision::fabs;
using boost::multiprecision::sqrt;
using testutil::check_rel;
using testutil::check_small;

namespace {

BigReal R_cf(const BigReal& q, const PrecCtx& ctx) {
    return rrcf_eval(nome_from_q(q), RrcfMethod::continued_fraction, ctx).R;
}

}  // namespace

TEST_CASE("rrcf_eval: the e^{-2pi} value by all three methods") {
    PrecCtx ctx(60);
    ScopedPrec sp(ctx);
    BigReal s5 = sqrt(BigReal(5));
    BigReal want = -(1 + s5) / 2 + sqrt((5 + s5) / 2);
    BigReal q = exp(-2 * const_pi());
    for (RrcfMethod m :
         {RrcfMethod::continued_fraction, RrcfMethod::theta_quotient, RrcfMethod::product_series}) {
        RrcfValue v = rrcf_eval(nome_from_q(q), m, ctx);
        check_rel(v.R, want, ctx.tol(10), "R(e^{-2pi})");
        CHECK(v.R > 0);
        CHECK(v.R < 1);
    }
}

TEST_CASE("rrcf_eval: leading behaviour and cross-method agreement on the grid") {
    PrecCtx ctx(50);
    ScopedPrec sp(ctx);
    {
        BigReal q = pow10(-30);
        BigReal lead = nth_root(q, 5);
        check_rel(R_cf(q, ctx) / lead, BigReal(1), pow10(-29), "R/q^{1/5} -> 1");
    }
    for (BigReal r : {BigReal(1) / 5, BigReal(1), BigReal(2), BigReal(4)}) {
        Nome q = nome_from_r(r, ctx);
        BigReal a = rrcf_eval(q, RrcfMethod::continued_fraction, ctx).R;
        BigReal b = rrcf_eval(q, RrcfMethod::theta_quotient, ctx).R;
        BigReal c = rrcf_eval(q, RrcfMethod::product_series, ctx).R;
        check_rel(a, b, ctx.tol(10), "cf vs theta");
        check_rel(a, c, ctx.tol(10), "cf vs product");
    }
    CHECK_THROWS_AS(rrcf_eval(nome_from_q(BigReal(1) / 2), RrcfMethod::continued_fraction,
                              PrecCtx(19, 1)),
                    domain_error);
}

TEST_CASE("rrcf product link holds on the grid") {
    PrecCtx ctx(50);
    ScopedPrec sp(ctx);
    for (BigReal r : {BigReal(1) / 5, BigReal(1), BigReal(2), BigReal(4)}) {
        Nome q = nome_from_r(r, ctx);
        BigReal R = R_cf(q.q, ctx);
        BigReal z = R * R * R * R * R;
        BigReal f1 = f_minus(q, ctx);
        BigReal f5 = f_minus(nome_from_q(q.q * q.q * q.q * q.q * q.q), ctx);
        BigReal c1 = f1 * f1 * f1, c5 = f5 * f5 * f5;
        BigReal F = c1 * c1 / (q.q * c5 * c5);
        check_small(fabs(1 / z - 11 - z - F) / F, ctx.tol(10), "product link");
    }
}

TEST_CASE("a_value: closed singular values") {
    PrecCtx ctx(60);
    ScopedPrec sp(ctx);
    BigReal s5 = sqrt(BigReal(5));
    check_rel(a_value(BigReal(1) / 5, ctx).A, 5 * s5, ctx.tol(10), "A_{1/5}");
    check_rel(a_value(BigReal(1), ctx).A, 125 * (2 + s5), ctx.tol(10), "A_1");
    BigReal X8 = BigReal(143375) / 16 + BigReal(64125) * s5 / 16 +
                 sqrt(BigReal(20553203125) / 32 + BigReal(9191671875) * s5 / 32) / 2;
    check_rel(a_value(BigReal(4), ctx).A / 8, X8, ctx.tol(10), "A_4/8");
    CHECK_THROWS_AS(a_value(BigReal(-1), ctx), domain_error);
}

TEST_CASE("a_value: cubic bridge to j and growth along the grid") {
    PrecCtx ctx(50);
    ScopedPrec sp(ctx);
    BigReal prev = 0;
    for (BigReal r : {BigReal(1) / 5, BigReal(1), BigReal(2), BigReal(4)}) {
        BigReal A = a_value(r, ctx).A;
        CHECK(A > prev);
        prev = A;
        BigReal j = j_eval(r, JRoute::eta_quotient, ctx).j;
        BigReal lhs = 3125 + 250 * A + A * A;
        BigReal rhs = nth_root(j, 3) * nth_root(A * A * A * A * A, 3);
        check_rel(lhs, rhs, ctx.tol(10), "cubic bridge");
    }
}

TEST_CASE("duplicate: doubling the nome") {
    PrecCtx ctx(60);
    ScopedPrec sp(ctx);
    BigReal q = exp(-2 * const_pi());
    BigReal u = R_cf(q, ctx);
    BigReal v = duplicate(u, ctx);
    check_rel(v, R_cf(q * q, ctx), ctx.tol(10), "R(e^{-4pi}) via duplication");

    BigReal u_pi = R_cf(exp(-const_pi()), ctx);
    check_rel(duplicate(u_pi, ctx), u, ctx.tol(10), "chain from e^{-pi}");

    // leading order: v ~ u^2 as u -> 0
    BigReal u_small = R_cf(pow10(-25), ctx);
    BigReal v_small = duplicate(u_small, ctx);
    check_rel(v_small / (u_small * u_small), BigReal(1), pow10(-20), "v/u^2 -> 1");
    CHECK_THROWS_AS(duplicate(BigReal(1), ctx), domain_error);
}

TEST_CASE("descend_r25: fifth-root descent of the nome exponent") {
    PrecCtx ctx(60);
    ScopedPrec sp(ctx);
    BigReal v = R_cf(exp(-5 * const_pi()), ctx);
    check_rel(descend_r25(v, ctx), R_cf(exp(-const_pi()), ctx), ctx.tol(10), "R(e^{-pi}) from r=25");

    // out^5/v = p(v)/g(v) = 1 - 5v + O(v^2)
    BigReal v_small = R_cf(pow10(-25), ctx);
    BigReal out = descend_r25(v_small, ctx);
    BigReal out5 = out * out * out * out * out;
    check_small(fabs(out5 / v_small - 1), 10 * v_small, "leading order");
}

TEST_CASE("descend_r25: chained with duplication it recovers k_{r/25}") {
    PrecCtx ctx(60);
    ScopedPrec sp(ctx);
    // start at r=25, walk down to r=1, then rebuild k_1 via j and the inverse map
    BigReal v25 = R_cf(exp(-5 * const_pi()), ctx);
    BigReal v1 = descend_r25(v25, ctx);          // R(e^{-pi})
    BigReal R2 = duplicate(v1, ctx);             // R(e^{-2pi})
    BigReal z = R2 * R2 * R2 * R2 * R2;
    BigReal z2 = z * z;
    BigReal num = z2 * z2 - 228 * z2 * z + 494 * z2 + 228 * z + 1;
    BigReal den = z2 + 11 * z - 1;
    BigReal j = -(num * num * num) / (z * den * den * den * den * den);
    check_rel(j, BigReal(1728), ctx.tol(10), "j_1 via the descent chain");
    BigReal k1 = u_inverse(j < 1728 ? BigReal(1728) : j, ctx).x;
    check_rel(k1, k_modulus(BigReal(1), ctx), ctx.tol(8), "k_1 via the descent chain");
}

TEST_CASE("n_value: derivative identity and the A-value link") {
    PrecCtx ctx(60);
    ScopedPrec sp(ctx);
    Nome q = nome_from_q(exp(-const_pi()));
    BigReal res = n_derivative_residual(q, ctx);
    BigReal f1 = f_minus(q, ctx);
    BigReal f4 = f1 * f1;
    f4 *= f4;
    BigReal scale = f4 / nth_root(q.q * q.q * q.q * q.q * q.q, 6);
    check_small(res / scale, pow10(-(ctx.digits / 2 - 8)), "derivative identity");

    // X_r = (125 b/(2a)) N(q^2)^6 equals (b/250a) A_r at r=1, with a=4, b=125
    BigReal n2 = n_value(nome_from_q(q.q * q.q), ctx);
    BigReal n6 = n2 * n2;
    n6 = n6 * n6 * n6;
    BigReal lhs = BigReal(125 * 125) / 8 * n6;
    BigReal rhs = BigReal(125) / 1000 * a_value(BigReal(1), ctx).A;
    check_rel(lhs, rhs, ctx.tol(10), "N^6 route to X");
}

TEST_CASE("n_value: doubling relation residual is reported, not asserted") {
    PrecCtx ctx(40);
    ScopedPrec sp(ctx);
    Nome q = nome_from_q(exp(-const_pi()));
    BigReal Xr = a_value(BigReal(1), ctx).A / 250;
    BigReal X4r = a_value(BigReal(4), ctx).A / 250;
    BigReal p13 = nth_root(Xr * X4r, 3);
    BigReal res = nth_root(BigReal(4), 3) * p13 + 10 * nth_root(BigReal(2), 3) * p13 * p13 -
                  2 * (Xr + X4r);
    CHECK(boost::multiprecision::isfinite(res));  // magnitude is reported by the suite
    (void)q;
}
