#include "sextic/jinv.hpp"

#include "sextic/elliptic.hpp"
#include "sextic/poly.hpp"
#include "sextic/rrcf.hpp"

#include <algorithm>

namespace sextic {

using boost::multiprecision::fabs;
using boost::multiprecision::sqrt;

namespace {

BigReal j_from_eta(const BigReal& r, const PrecCtx& ctx) {
    BigReal x = eta(r, /*half_shift=*/true, ctx).re / eta(r, /*half_shift=*/false, ctx).re;
    BigReal x8 = x * x;
    x8 *= x8;
    x8 *= x8;
    BigReal base = x8 * x8 + 16 / x8;
    return base * base * base;
}

BigReal j_from_rrcf(const BigReal& r, const PrecCtx& ctx) {
    Nome q2 = nome_from_r_doubled(r, ctx);
    BigReal R = rrcf_eval(q2, RrcfMethod::continued_fraction, ctx).R;
    BigReal z = R * R * R * R * R;
    BigReal z2 = z * z;
    BigReal num = z2 * z2 - 228 * z2 * z + 494 * z2 + 228 * z + 1;
    BigReal den_base = z2 + 11 * z - 1;
    BigReal den5 = den_base * den_base * den_base * den_base * den_base;
    return -(num * num * num) / (z * den5);
}

BigReal j_from_modulus(const BigReal& r, const PrecCtx& ctx) {
    BigReal k = k_modulus(r, ctx);
    BigReal k2 = k * k, kp2 = 1 - k2;
    BigReal c = k2 + kp2 * kp2;
    return 256 * c * c * c / (k2 * k2 * kp2 * kp2);
}

// beta_r from the 2F1(1/6,5/6;1;.) period ratio: bisection bracket, then
// secant refinement on f(beta) = u(1-beta)/u(beta) - sqrt(r).
BigReal beta_from_ratio(const BigReal& r, const PrecCtx& ctx) {
    const BigReal target = sqrt(r);
    auto f = [&](const BigReal& b) { return hyp2f1_sixth(1 - b, ctx) / hyp2f1_sixth(b, ctx) - target; };
    BigReal lo = pow10(-(ctx.working())), hi = BigReal(1) / 2;
    BigReal flo = f(lo), fhi = f(hi);
    if (flo < 0) throw domain_error("beta route: r too large for the working bracket");
    if (fhi > 0) {
        // r < 1: the root lies on the beta > 1/2 branch, mirror it
        if (r >= 1) throw convergence_error("beta route: bracketing failed", fabs(fhi));
        return 1 - beta_from_ratio(1 / r, ctx);
    }
    for (int i = 0; i < 20; ++i) {
        BigReal mid = (lo + hi) / 2, fm = f(mid);
        if (fm > 0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    BigReal x0 = lo, x1 = hi, f0 = flo, f1 = fhi;
    const BigReal tol = ctx.eps() * 100;
    for (int it = 0; it < 400; ++it) {
        if (fabs(f1) < tol * std::max(BigReal(1), target)) return x1;
        if (f1 == f0) break;
        BigReal x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (x2 <= 0 || x2 >= 1) x2 = (x0 + x1) / 2;
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f(x1);
    }
    throw convergence_error("beta route: secant iteration stalled", fabs(f1));
}

}  // namespace

JValue j_eval(const BigReal& r_in, JRoute route, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (r_in <= 0) throw domain_error("j_eval: r must be positive");
    BigReal r = at_working(r_in, ctx);
    BigReal j;
    switch (route) {
        case JRoute::eta_quotient: j = j_from_eta(r, ctx); break;
        case JRoute::rrcf: j = j_from_rrcf(r, ctx); break;
        case JRoute::modulus: j = j_from_modulus(r, ctx); break;
        case JRoute::beta: {
            BigReal b = beta_from_ratio(r, ctx);
            j = 432 / (b * (1 - b));
            break;
        }
        default: throw domain_error("j_eval: unknown route");
    }
    return {r, j, route};
}

BigReal u_forward(const BigReal& x_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (!(x_in > 0 && x_in < 1)) throw domain_error("u_forward: argument must lie in (0,1)");
    BigReal x = at_working(x_in, ctx);
    BigReal x2 = x * x, xp2 = 1 - x2;
    BigReal c = x2 + xp2 * xp2;
    return 256 * c * c * c / (x2 * x2 * xp2 * xp2);
}

UInverseResult u_inverse(const BigReal& t_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (t_in < 1728) throw domain_error("u_inverse: no real singular modulus below 1728; use series solver");
    BigReal t = at_working(t_in, ctx);
    // 256(1-u)^3 = t u^2  =>  -256 u^3 + (768 - t) u^2 - 768 u + 256 = 0
    std::vector<BigComplex> coeffs{BigComplex(BigReal(256)), BigComplex(BigReal(-768)),
                                   BigComplex(768 - t), BigComplex(BigReal(-256))};
    auto roots = poly_roots(coeffs, ctx);
    const BigReal imag_tol = ctx.tol(8);
    std::optional<BigReal> u_root;
    for (const auto& z : roots) {
        if (fabs(z.im) < imag_tol * std::max(BigReal(1), fabs(z.re)) && z.re > 0 && z.re < 1) {
            u_root = z.re;
            break;  // the cubic has exactly one root in (0,1)
        }
    }
    if (!u_root) throw convergence_error("u_inverse: no real root in (0,1)", BigReal(0));
    BigReal u = *u_root;
    if (u > BigReal(1) / 4) u = BigReal(1) / 4;  // t = 1728 up to rounding
    BigReal rad = 1 - 4 * u;
    if (rad < 0) rad = 0;
    BigReal x = sqrt((1 - sqrt(rad)) / 2);
    return {x, sqrt(1 - x * x), u};
}

}  // namespace sextic
