#include "sextic/rrcf.hpp"

#include "sextic/poly.hpp"

#include <algorithm>
#include <cmath>

namespace sextic {

using boost::multiprecision::exp;
using boost::multiprecision::fabs;
using boost::multiprecision::log;
using boost::multiprecision::sqrt;

namespace {

BigReal rrcf_continued_fraction(const BigReal& q, const PrecCtx& ctx) {
    // depth so that q^N < 10^-(digits+guard)
    double logq = static_cast<double>(log(q));
    long depth = static_cast<long>(std::ceil((ctx.working() + 2) * std::log(10.0) / -logq)) + 4;
    BigReal t = 1;
    for (long k = depth; k >= 1; --k) {
        BigReal qk;
        mpfr_pow_si(qk.backend().data(), q.backend().data(), k, MPFR_RNDN);
        t = 1 + qk / t;
    }
    return nth_root(q, 5) / t;
}

BigReal rrcf_theta(const BigReal& q, const PrecCtx& ctx) {
    BigReal x = -log(q);
    Nome p = nome_from_q(exp(-5 * x / 2));
    BigComplex top = theta4_z({BigReal(0), 3 * x / 4}, p, ctx);
    BigComplex bot = theta4_z({BigReal(0), x / 4}, p, ctx);
    BigComplex ratio = top / bot;
    if (fabs(ratio.im) > ctx.tol(10) * fabs(ratio.re))
        throw branch_error("rrcf_theta", "theta quotient is not real");
    return exp(-x / 5) * ratio.re;
}

BigReal rrcf_product(const BigReal& q, const PrecCtx& ctx) {
    Nome n1 = nome_from_q(q);
    BigReal q5 = q * q * q * q * q;
    BigReal f1 = f_minus(n1, ctx);
    BigReal f5 = f_minus(nome_from_q(q5), ctx);
    BigReal quot = f1 * f1 * f1;
    quot *= quot;
    BigReal den = f5 * f5 * f5;
    den *= den;
    BigReal F = quot / (q * den);
    // 1/z - z = 11 + F with z = R^5, take the positive root
    BigReal s = 11 + F;
    BigReal z = 2 / (s + sqrt(s * s + 4));
    return nth_root(z, 5);
}

}  // namespace

RrcfValue rrcf_eval(const Nome& nome, RrcfMethod method, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (!(nome.q > 0 && nome.q < 1)) throw domain_error("rrcf_eval: nome must lie in (0,1)");
    BigReal q = at_working(nome.q, ctx);
    BigReal val;
    switch (method) {
        case RrcfMethod::continued_fraction: val = rrcf_continued_fraction(q, ctx); break;
        case RrcfMethod::theta_quotient: val = rrcf_theta(q, ctx); break;
        case RrcfMethod::product_series: val = rrcf_product(q, ctx); break;
        default: throw domain_error("rrcf_eval: unknown method");
    }
    return {nome, val, method};
}

AValue a_value(const BigReal& r_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (r_in <= 0) throw domain_error("a_value: r must be positive");
    BigReal r = at_working(r_in, ctx);
    Nome q = nome_from_r(r, ctx);
    BigReal q2 = q.q * q.q;

    BigReal f_top = f_minus(nome_from_q(q2), ctx);
    BigReal f_bot = f_minus(nome_from_q(exp(-10 * const_pi() * sqrt(r))), ctx);
    BigReal t = f_top * f_top * f_top, b = f_bot * f_bot * f_bot;
    BigReal a_product = (t * t) / (q2 * b * b);

    BigReal R2 = rrcf_eval(nome_from_q(q2), RrcfMethod::continued_fraction, ctx).R;
    BigReal R5 = R2 * R2 * R2 * R2 * R2;
    BigReal a_rrcf = 1 / R5 - 11 - R5;

    if (rel_diff(a_product, a_rrcf) > ctx.tol(10))
        throw verification_error("a_value: product and continued-fraction routes disagree");
    return {r, a_product};
}

BigReal duplicate(const BigReal& u_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (!(u_in > 0 && u_in < 1)) throw domain_error("duplicate: u must lie in (0,1)");
    BigReal u = at_working(u_in, ctx);
    // u v^3 + u^3 v^2 - v + u^2 = 0
    std::vector<BigComplex> coeffs{BigComplex(u * u), BigComplex(BigReal(-1)), BigComplex(u * u * u),
                                   BigComplex(u)};
    auto roots = poly_roots(coeffs, ctx);
    const BigReal imag_tol = ctx.tol(8);
    std::vector<BigReal> inside;
    for (const auto& z : roots) {
        if (fabs(z.im) < imag_tol * std::max(BigReal(1), fabs(z.re)) && z.re > 0 && z.re < 1)
            inside.push_back(z.re);
    }
    if (inside.empty()) throw domain_error("duplicate: no root in (0,1)");
    if (inside.size() > 1) throw branch_error("duplicate", "multiple candidate roots in (0,1)");
    return inside.front();
}

BigReal descend_r25(const BigReal& v_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (!(v_in > 0 && v_in < 1)) throw domain_error("descend_r25: v must lie in (0,1)");
    BigReal v = at_working(v_in, ctx);
    BigReal v2 = v * v, v3 = v2 * v, v4 = v3 * v;
    BigReal rad = v * (1 - 2 * v + 4 * v2 - 3 * v3 + v4) / (1 + 3 * v + 4 * v2 + 2 * v3 + v4);
    if (rad <= 0) throw domain_error("descend_r25: negative radicand (input is not an R-value)");
    return nth_root(rad, 5);
}

BigReal n_value(const Nome& q, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    BigReal R = rrcf_eval(q, RrcfMethod::continued_fraction, ctx).R;
    BigReal R5 = R * R * R * R * R;
    BigReal F = 1 / R5 - 11 - R5;
    if (F <= 0) throw domain_error("n_value: sixth-root argument not positive");
    return nth_root(F, 6) / 5;
}

BigReal n_derivative_residual(const Nome& nome, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    const BigReal q = at_working(nome.q, ctx);
    BigReal h = pow10(-(ctx.digits / 2));
    if (q + h >= 1 || q - h <= 0) throw domain_error("n_derivative_residual: step leaves (0,1)");
    BigReal R_hi = rrcf_eval(nome_from_q(q + h), RrcfMethod::continued_fraction, ctx).R;
    BigReal R_lo = rrcf_eval(nome_from_q(q - h), RrcfMethod::continued_fraction, ctx).R;
    BigReal Rp = (R_hi - R_lo) / (2 * h);
    BigReal R = rrcf_eval(nome, RrcfMethod::continued_fraction, ctx).R;
    BigReal R5 = R * R * R * R * R;
    BigReal F = 1 / R5 - 11 - R5;
    if (F <= 0) throw domain_error("n_derivative_residual: sixth-root argument not positive");
    BigReal lhs = 5 * Rp / (R * nth_root(F, 6));
    BigReal f1 = f_minus(nome, ctx);
    BigReal f4 = f1 * f1;
    f4 *= f4;
    BigReal rhs = f4 / nth_root(q * q * q * q * q, 6);
    return fabs(lhs - rhs);
}

}  // namespace sextic
