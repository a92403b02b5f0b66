#include "sextic/qseries.hpp"

namespace sextic {

using boost::multiprecision::exp;
using boost::multiprecision::fabs;
using boost::multiprecision::log;
using boost::multiprecision::sqrt;

namespace {

void check_nome(const BigReal& q) {
    if (!(q > 0 && q < 1)) throw domain_error("nome must satisfy 0 < q < 1");
}

}  // namespace

Nome nome_from_q(const BigReal& q) {
    check_nome(q);
    return {q, std::nullopt, false};
}

Nome nome_from_r(const BigReal& r_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (r_in <= 0) throw domain_error("nome_from_r: r must be positive");
    BigReal r = at_working(r_in, ctx);
    return {exp(-const_pi() * sqrt(r)), r, false};
}

Nome nome_from_r_doubled(const BigReal& r_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (r_in <= 0) throw domain_error("nome_from_r: r must be positive");
    BigReal r = at_working(r_in, ctx);
    return {exp(-2 * const_pi() * sqrt(r)), r, true};
}

BigReal f_minus(const Nome& nome, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    check_nome(nome.q);
    const BigReal q = at_working(nome.q, ctx);
    const BigReal eps = ctx.eps();
    BigReal prod = 1;
    BigReal qn = q;
    while (qn >= eps) {
        prod *= 1 - qn;
        qn *= q;
    }
    return prod;
}

BigComplex eta(const BigReal& r, bool half_shift, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (r <= 0) throw domain_error("eta: r must be positive");
    const BigReal pr = const_pi() * sqrt(at_working(r, ctx));
    // tau = i sqrt(r):    e^{-pi sqrt r /12} f(-e^{-2 pi sqrt r})
    // tau = i sqrt(r)/2:  e^{-pi sqrt r /24} f(-e^{-pi sqrt r})
    BigReal val = half_shift ? exp(-pr / 24) * f_minus(nome_from_q(exp(-pr)), ctx)
                             : exp(-pr / 12) * f_minus(nome_from_q(exp(-2 * pr)), ctx);
    return {val, BigReal(0)};
}

ThetaNulls theta_nulls(const Nome& nome, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    check_nome(nome.q);
    const BigReal q = at_working(nome.q, ctx);
    const BigReal eps = ctx.eps();

    // theta2: terms q^{(n+1/2)^2}, n >= 0; successive ratio q^{2n+2}
    BigReal t2 = 0;
    {
        BigReal term = sqrt(sqrt(q));  // q^{1/4}
        BigReal ratio = q * q;         // q^{2n+2} at n=0
        while (term >= eps) {
            t2 += term;
            term *= ratio;
            ratio *= q * q;
        }
        t2 *= 2;
    }
    // theta3/theta4: terms q^{n^2}, n >= 1; successive ratio q^{2n+1}
    BigReal t3 = 1, t4 = 1;
    {
        BigReal term = q;
        BigReal ratio = q * q * q;  // q^{2n+1} at n=1
        int sign = -1;
        while (term >= eps) {
            t3 += 2 * term;
            t4 += 2 * sign * term;
            term *= ratio;
            ratio *= q * q;
            sign = -sign;
        }
    }
    return {t2, t3, t4};
}

BigComplex theta4_z(const BigComplex& z_in, const Nome& nome, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    check_nome(nome.q);
    const BigReal q = at_working(nome.q, ctx);
    const BigComplex z{at_working(z_in.re, ctx), at_working(z_in.im, ctx)};
    const BigReal eps = ctx.eps();
    const BigReal log_q = log(q);  // negative

    // |q^{n^2} cos(2nz)| ~ q^{n^2} e^{2n|Im z|}; monotone decreasing once
    // n > (2|Im z|/(-log q) - 1)/2.
    const BigReal im_mag = fabs(z.im);
    BigReal n_turn = (2 * im_mag / (-log_q) - 1) / 2;
    long n_min = n_turn <= 0 ? 0 : static_cast<long>(n_turn) + 1;
    if (n_min > 2000000) throw domain_error("theta4_z: divergent parameter combination");

    BigComplex sum{BigReal(1), BigReal(0)};
    int sign = -1;
    for (long n = 1;; ++n) {
        BigReal qn2 = exp(BigReal(n) * BigReal(n) * log_q);
        BigComplex term = BigComplex(BigReal(2 * sign) * qn2) * cos(BigComplex(BigReal(2 * n)) * z);
        sum += term;
        if (n > n_min && abs(term) < eps) break;
        if (n > 2000000) throw domain_error("theta4_z: series failed to converge");
        sign = -sign;
    }
    return sum;
}

}  // namespace sextic
