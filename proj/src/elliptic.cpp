#include "sextic/elliptic.hpp"

#include <algorithm>

namespace sextic {

using boost::multiprecision::asinh;
using boost::multiprecision::exp;
using boost::multiprecision::fabs;
using boost::multiprecision::log;
using boost::multiprecision::sqrt;

BigReal ellipK(const BigReal& x_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (x_in < 0 || x_in >= 1) throw domain_error("ellipK: modulus must lie in [0,1)");
    BigReal x = at_working(x_in, ctx);
    return const_pi() / (2 * agm(BigReal(1), sqrt(1 - x * x), ctx));
}

BigReal k_modulus(const BigReal& r, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (r <= 0) throw domain_error("k_modulus: r must be positive");
    ThetaNulls th = theta_nulls(nome_from_r(r, ctx), ctx);
    BigReal k = (th.t2 * th.t2) / (th.t3 * th.t3);
    return k;
}

BigReal k_inverse(const BigReal& x_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (!(x_in > 0 && x_in < 1)) throw domain_error("k_inverse: modulus must lie in (0,1)");
    BigReal x = at_working(x_in, ctx);
    BigReal num = ellipK(sqrt(1 - x * x), ctx);
    BigReal den = ellipK(x, ctx);
    return (num / den) * (num / den);
}

ModulusPair pair_from_moduli(const BigReal& k_r, const BigReal& k25_r) {
    if (!(k_r > 0 && k_r < 1 && k25_r > 0 && k25_r < 1))
        throw domain_error("pair_from_moduli: moduli must lie in (0,1)");
    BigReal kp = sqrt(1 - k_r * k_r), k25p = sqrt(1 - k25_r * k25_r);
    return {k_r, k25_r, sqrt(k_r * k25_r), sqrt(kp * k25p)};
}

ModulusPair pair_from_L(const BigReal& L_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (L_in <= 0) throw domain_error("pair_from_L: L must be positive");
    BigReal L = at_working(L_in, ctx);
    BigReal M = (18 + L) / (64 + 3 * L);
    BigReal w2 = L * (18 + L) / (6 * (64 + 3 * L));
    BigReal w = sqrt(w2);
    BigReal A = nth_root(L / M, 6);
    BigReal T = A - 4 / A;
    BigReal S = sqrt(4 + BigReal(2) / 3 * T * T) / 2 + sqrt(BigReal(2) / 3) * T / 2;
    BigReal k_r = w / (S * S);
    BigReal k25 = w * S * S;
    if (!(k_r > 0 && k_r < 1 && k25 > 0 && k25 < 1))
        throw domain_error("pair_from_L: parameter outside the real-modulus range");
    return pair_from_moduli(k_r, k25);
}

BigReal modular5_residual(const ModulusPair& pair, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    BigReal k = at_working(pair.k_r, ctx), k25 = at_working(pair.k25_r, ctx);
    BigReal kp = sqrt(1 - k * k);
    BigReal k25p = sqrt(1 - k25 * k25);
    BigReal prod = k * k25 * kp * k25p;
    BigReal lhs = k * k25 + kp * k25p + 2 * nth_root(BigReal(4), 3) * nth_root(prod, 3);
    return fabs(lhs - 1);
}

// --- chain maps ------------------------------------------------------------

BigReal map_u1(const BigReal& y_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (y_in <= 0) throw domain_error("map_u1: argument must be positive");
    BigReal y = at_working(y_in, ctx);
    BigReal y2 = y * y, y6 = y2 * y2 * y2;
    BigReal x2 = -1 / (2 * y2) + y2 * y2 / 2 + sqrt(1 + 18 * y6 + y6 * y6) / (2 * y2);
    if (x2 <= 0) throw domain_error("map_u1: negative radicand");
    return sqrt(x2);
}

BigReal map_v(const BigReal& x_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (x_in <= 0) throw domain_error("map_v: argument must be positive");
    BigReal x = at_working(x_in, ctx);
    BigReal x2 = x * x, x6 = x2 * x2 * x2;
    BigReal x12 = x6 * x6, x18 = x12 * x6;
    // h = (-125 - 9 x^6 + 3 sqrt3 sqrt(-125 x^6 - 22 x^12 - x^18))^{1/3},
    // principal branch; the imaginary parts cancel in the sum below.
    BigComplex inner = sqrt(BigComplex(-125 * x6 - 22 * x12 - x18, BigReal(0)));
    BigComplex h = pow(BigComplex(-125 - 9 * x6, BigReal(0)) + BigComplex(3 * sqrt(BigReal(3))) * inner,
                       BigReal(1) / 3);
    BigComplex val = BigComplex(-5 / (3 * x2)) + BigComplex(25 / (3 * x2)) / h + BigComplex(x2 * x2) / h +
                     h / BigComplex(3 * x2);
    BigReal scale = std::max(BigReal(1), fabs(val.re));
    if (fabs(val.im) > ctx.tol(10) * scale)
        throw branch_error("map_v", "cube-root branch left an imaginary residue of " +
                                        to_decimal(fabs(val.im), 8));
    if (val.re <= 0) throw branch_error("map_v", "radicand collapsed to a non-positive real");
    return sqrt(val.re);
}

BigReal map_q(const BigReal& a_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (a_in <= 0) throw domain_error("map_q: argument must be positive");
    BigReal a = at_working(a_in, ctx);
    BigReal y = asinh((11 + a) / 2);
    BigReal t = exp(y / 5);
    BigReal t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    BigReal num = -1 - t + t2;
    num = num * num * num * num * num;
    BigReal den = t - t2 + 2 * t3 - 3 * t4 + 5 * t5 + 3 * t5 * t + 2 * t5 * t2 + t5 * t3 + t5 * t4;
    return num / den;
}

BigReal map_q_inverse(const BigReal& a_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (a_in <= 0) throw domain_error("map_q_inverse: argument must be positive");
    const BigReal target = log(at_working(a_in, ctx));
    auto f = [&](const BigReal& u) { return log(map_q(exp(u), ctx)) - target; };
    // map_q(x) ~ x^{1/5} for large x, so log-space is nearly affine.
    BigReal u0 = 5 * target, u1 = u0 + BigReal(1) / 10;
    BigReal f0 = f(u0), f1 = f(u1);
    const BigReal tol = ctx.eps() * 100;
    for (int it = 0; it < 300; ++it) {
        if (fabs(f1) < tol) return exp(u1);
        if (f1 == f0) break;
        BigReal u2 = u1 - f1 * (u1 - u0) / (f1 - f0);
        u0 = u1;
        f0 = f1;
        u1 = u2;
        f1 = f(u1);
    }
    throw convergence_error("map_q_inverse: secant iteration stalled", fabs(f1));
}

BigReal p_iterate(const BigReal& r0, const BigReal& k_r0, const BigReal& k_r0_over_25, int n,
                  const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (r0 <= 0) throw domain_error("p_iterate: r0 must be positive");
    if (n < 1) throw domain_error("p_iterate: n must be a positive integer");
    if (!(k_r0 > 0 && k_r0 < 1 && k_r0_over_25 > 0 && k_r0_over_25 < 1))
        throw domain_error("p_iterate: moduli must lie in (0,1)");
    BigReal k_hi = at_working(k_r0, ctx), k_lo = at_working(k_r0_over_25, ctx);
    BigReal g_hi = k_hi * sqrt(1 - k_hi * k_hi);
    BigReal g_lo = k_lo * sqrt(1 - k_lo * k_lo);
    BigReal ratio = g_hi / g_lo;
    BigReal g = g_hi;
    for (int j = 0; j < n; ++j) {
        BigReal a_low = map_u1(nth_root(1 / ratio, 12), ctx);
        a_low = a_low * a_low;
        a_low = a_low * a_low * a_low;                 // U1(zeta)^6 = A at the pair's lower level
        BigReal a_high = map_q_inverse(a_low, ctx);    // ascend one level
        BigReal zeta_next = map_v(nth_root(a_high, 6), ctx);
        ratio = 1 / pow(zeta_next, 12);
        g *= ratio;
    }
    // k from k k' without cancellation: k^2 = 2G^2/(1 + sqrt(1-4G^2)).
    BigReal rad = 1 - 4 * g * g;
    if (rad < 0) rad = 0;
    return g * sqrt(2 / (1 + sqrt(rad)));
}

// --- fifth base ------------------------------------------------------------

namespace {

BigReal hyp_sixth_direct(const BigReal& x, const PrecCtx& ctx) {
    const BigReal eps = ctx.eps();
    const BigReal a = BigReal(1) / 6, b = BigReal(5) / 6;
    BigReal sum = 0, term = 1;
    for (long n = 0; n < 1000000; ++n) {
        sum += term;
        term *= (a + n) * (b + n) / ((1 + n) * (1 + n)) * x;
        if (fabs(term) < eps) return sum + term;
    }
    throw convergence_error("hyp2f1_sixth: direct series stalled", fabs(term));
}

// c = a + b logarithmic case at argument 1-z:
//   2F1(a,b;a+b;x) = 1/(G(a)G(b)) sum ((a)_n (b)_n / (n!)^2)
//                    [2 psi(n+1) - psi(a+n) - psi(b+n) - log(1-x)] (1-x)^n
BigReal hyp_sixth_near_one(const BigReal& x, const PrecCtx& ctx) {
    using boost::multiprecision::tgamma;
    const BigReal eps = ctx.eps();
    const BigReal a = BigReal(1) / 6, b = BigReal(5) / 6;
    const BigReal z = 1 - x;
    if (z <= 0) throw domain_error("hyp2f1_sixth: argument must be below 1");
    const BigReal logz = log(z);
    BigReal psi_a = digamma(a), psi_b = digamma(b), psi_n = digamma(BigReal(1));
    BigReal poch = 1, zn = 1, sum = 0;
    for (long n = 0; n < 1000000; ++n) {
        BigReal term = poch * (2 * psi_n - psi_a - psi_b - logz) * zn;
        sum += term;
        if (n > 2 && fabs(term) < eps) break;
        poch *= (a + n) * (b + n) / ((1 + n) * (1 + n));
        zn *= z;
        psi_a += 1 / (a + n);
        psi_b += 1 / (b + n);
        psi_n += 1 / (BigReal(1) + n);
    }
    return sum / (tgamma(a) * tgamma(b));
}

}  // namespace

BigReal hyp2f1_sixth(const BigReal& x_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (!(x_in > 0 && x_in < 1)) throw domain_error("hyp2f1_sixth: argument must lie in (0,1)");
    BigReal x = at_working(x_in, ctx);
    return x <= BigReal(1) / 2 ? hyp_sixth_direct(x, ctx) : hyp_sixth_near_one(x, ctx);
}

BigReal beta_of_k(const BigReal& k_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (!(k_in > 0 && k_in < 1)) throw domain_error("beta_of_k: modulus must lie in (0,1)");
    BigReal k = at_working(k_in, ctx);
    BigReal k2 = k * k, kp2 = 1 - k2;
    BigReal c = k2 + kp2 * kp2;
    BigReal u = 256 * c * c * c / (k2 * k2 * kp2 * kp2);
    BigReal rad = BigReal(1) / 4 - 432 / u;
    if (rad < 0) {
        if (rad < -ctx.tol(8)) throw domain_error("beta_of_k: j below the real range");
        rad = 0;  // j = 1728 up to rounding
    }
    return BigReal(1) / 2 - sqrt(rad);
}

BigReal beta_inverse(const BigReal& x_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (!(x_in > 0 && x_in < 1)) throw domain_error("beta_inverse: argument must lie in (0,1)");
    BigReal x = at_working(x_in, ctx);
    BigReal q = hyp2f1_sixth(1 - x, ctx) / hyp2f1_sixth(x, ctx);
    return q * q;
}

BigReal w_from_A(const BigReal& A_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (A_in <= 0) throw domain_error("w_from_A: A must be positive");
    BigReal A = at_working(A_in, ctx);
    BigReal A2 = A * A;
    BigReal A6 = A2 * A2 * A2, A12 = A6 * A6;
    BigReal w2 = (4096 - 20 * A6 + A12 + (A6 - 64) * sqrt(4096 + 88 * A6 + A12)) / (108 * A6);
    if (w2 <= 0) throw domain_error("w_from_A: negative radicand");
    return sqrt(w2);
}

}  // namespace sextic
