#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sextic/qseries.hpp"
#include "test_util.hpp"

using namespace sextic;
using boost::multiprecision::exp;
using boost::multiprecision::fabs;
using boost::multiprecision::sqrt;
using testutil::check_rel;
using testutil::check_small;

TEST_CASE("f_minus: empty-product limit and domain") {
    PrecCtx ctx(60);
    ScopedPrec sp(ctx);
    BigReal q = pow10(-50);
    check_rel(f_minus(nome_from_q(q), ctx), 1 - q, ctx.tol(5), "f(-q) for tiny q");
    CHECK_THROWS_AS(nome_from_q(BigReal(1)), domain_error);
    CHECK_THROWS_AS(nome_from_q(BigReal(0)), domain_error);
}

TEST_CASE("eta(i) matches the gamma closed form") {
    PrecCtx ctx(60);
    ScopedPrec sp(ctx);
    BigComplex e = eta(BigReal(1), false, ctx);
    CHECK(e.im == 0);
    check_rel(e.re, testutil::eta_i_gamma(ctx), ctx.tol(5), "eta(i)");
}

TEST_CASE("eta equals the exponential prefactor times f_minus on a grid") {
    PrecCtx ctx(50);
    ScopedPrec sp(ctx);
    for (BigReal r : {BigReal(1) / 2, BigReal(1), BigReal(2), BigReal(3), BigReal(5)}) {
        BigReal pr = const_pi() * sqrt(r);
        BigReal lhs = eta(r, false, ctx).re;
        BigReal rhs = exp(-pr / 12) * f_minus(nome_from_q(exp(-2 * pr)), ctx);
        check_rel(lhs, rhs, ctx.tol(5), "eta/f link");
        BigReal lhs_half = eta(r, true, ctx).re;
        BigReal rhs_half = exp(-pr / 24) * f_minus(nome_from_q(exp(-pr)), ctx);
        check_rel(lhs_half, rhs_half, ctx.tol(5), "eta/f link, half shift");
    }
    CHECK_THROWS_AS(eta(BigReal(0), false, ctx), domain_error);
}

TEST_CASE("theta nulls: small-q limits and the Jacobi identity") {
    PrecCtx ctx(60);
    ScopedPrec sp(ctx);
    {
        BigReal q = pow10(-40);
        ThetaNulls th = theta_nulls(nome_from_q(q), ctx);
        check_small(th.t2, pow10(-9), "theta2 -> 0");
        check_small(fabs(th.t3 - 1 - 2 * q), ctx.tol(5), "theta3 = 1 + 2q + O(q^4)");
        check_small(fabs(th.t4 - 1 + 2 * q), ctx.tol(5), "theta4 = 1 - 2q + O(q^4)");
    }
    {
        ThetaNulls th = theta_nulls(nome_from_q(exp(-const_pi())), ctx);
        BigReal lhs = th.t3 * th.t3 * th.t3 * th.t3;
        BigReal rhs = th.t2 * th.t2 * th.t2 * th.t2 + th.t4 * th.t4 * th.t4 * th.t4;
        check_rel(lhs, rhs, ctx.tol(5), "Jacobi identity");
        check_rel((th.t2 * th.t2) / (th.t3 * th.t3), 1 / sqrt(BigReal(2)), ctx.tol(5),
                  "k_1 from theta quotient");
        CHECK(th.t2 > 0);
        CHECK(th.t3 > 0);
        CHECK(th.t4 > 0);
    }
}

TEST_CASE("theta nulls: truncation is below the first omitted term") {
    PrecCtx lo(40), hi(90);
    Nome q = nome_from_q(BigReal(1) / 4);
    ThetaNulls a = theta_nulls(q, lo);
    ThetaNulls b = theta_nulls(q, hi);
    check_small(rel_diff(a.t2, b.t2), lo.tol(2), "theta2 truncation");
    check_small(rel_diff(a.t3, b.t3), lo.tol(2), "theta3 truncation");
    check_small(rel_diff(a.t4, b.t4), lo.tol(2), "theta4 truncation");
}

TEST_CASE("theta4_z: reduction to the null and real positivity on the axis") {
    PrecCtx ctx(60);
    ScopedPrec sp(ctx);
    Nome q = nome_from_q(BigReal(1) / 5);
    BigComplex z0 = theta4_z(BigComplex(BigReal(0)), q, ctx);
    ThetaNulls th = theta_nulls(q, ctx);
    check_rel(z0.re, th.t4, ctx.tol(5), "theta4(0,q) = theta4 null");
    check_small(z0.im, ctx.eps(), "theta4(0,q) real");

    // z = i pi sqrt(r)/2, q = e^{-5 pi sqrt(r)} at r = 1: real and positive
    BigReal pr = const_pi();
    BigComplex v = theta4_z({BigReal(0), pr / 2}, nome_from_q(exp(-5 * pr)), ctx);
    CHECK(v.re > 0);
    check_small(v.im, ctx.eps() * 10, "axis value has no imaginary part");
}
