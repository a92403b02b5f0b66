#include "sextic/solver.hpp"

#include "sextic/elliptic.hpp"
#include "sextic/jinv.hpp"
#include "sextic/poly.hpp"
#include "sextic/rrcf.hpp"

#include <algorithm>

namespace sextic {

using boost::multiprecision::fabs;
using boost::multiprecision::sqrt;
using boost::multiprecision::tgamma;

BigReal SexticInstance::j_target() const {
    if (a == 0 || b == 0) throw domain_error("SexticInstance: a and b must be nonzero");
    return 250 * c1 * c1 * c1 / (a * a * b);
}

namespace {

// |b^2/(20a) + bX + aX^2 - C1 X^{5/3}|; for X < 0 the cube-root branch of
// X^{5/3} is enumerated and the minimal residual reported.
BigReal eq_residual(const SexticInstance& inst, const BigReal& X, const PrecCtx& ctx) {
    BigReal head = inst.b * inst.b / (20 * inst.a) + inst.b * X + inst.a * X * X;
    if (X > 0) {
        BigReal x53 = boost::multiprecision::exp(BigReal(5) / 3 * boost::multiprecision::log(X));
        return fabs(head - inst.c1 * x53);
    }
    if (X == 0) return fabs(head);
    BigReal best = -1;
    BigComplex base = pow(BigComplex(X), BigReal(5) / 3);  // principal
    const BigReal two_pi = 2 * const_pi();
    for (int k = 0; k < 3; ++k) {
        BigComplex rot = exp(BigComplex(BigReal(0), two_pi * BigReal(5 * k) / 3));
        BigReal res = abs(BigComplex(head) - BigComplex(inst.c1) * base * rot);
        if (best < 0 || res < best) best = res;
    }
    (void)ctx;
    return best;
}

BigReal residual_scale(const SexticInstance& inst, const BigReal& X) {
    return std::max({fabs(inst.b * inst.b / (20 * inst.a)), fabs(inst.b * X), fabs(inst.a * X * X)});
}

}  // namespace

SolveReport solve_modular(const SexticInstance& inst_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    SexticInstance inst{at_working(inst_in.a, ctx), at_working(inst_in.b, ctx),
                        at_working(inst_in.c1, ctx)};
    BigReal jt = inst.j_target();
    if (jt < 1728) {
        if (rel_diff(jt, BigReal(1728)) >= ctx.tol(8))
            throw branch_error("solve_modular", "j-target below 1728 has no real singular modulus; "
                                                "use the series solver");
        jt = 1728;  // rounding landed a hair below the corner
    }
    UInverseResult ui = u_inverse(jt, ctx);
    BigReal r = k_inverse(ui.x, ctx);
    BigReal A = a_value(r, ctx).A;
    BigReal X = inst.b / (250 * inst.a) * A;

    SolveReport rep;
    rep.method = SolveMethod::modular;
    rep.alpha = ui.x;
    rep.r = r;
    rep.X = BigComplex(X);
    rep.residual = eq_residual(inst, X, ctx);
    rep.sextic_root = X >= 0 ? BigComplex(nth_root(X, 3)) : BigComplex(-nth_root(-X, 3));
    rep.digits = ctx.digits;
    rep.alpha_alt = ui.x_alt;
    rep.r_alt = 1 / r;
    if (rep.residual >= ctx.tol(12) * residual_scale(inst, X))
        throw verification_error("solve_modular: residual exceeds the report invariant");
    return rep;
}

std::pair<BigReal, SolveReport> solve_from_L(const BigReal& L, const BigReal& a_in,
                                             const BigReal& b_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (a_in == 0 || b_in == 0) throw domain_error("solve_from_L: a and b must be nonzero");
    BigReal a = at_working(a_in, ctx), b = at_working(b_in, ctx);
    ModulusPair pair = pair_from_L(L, ctx);
    const BigReal& x = pair.k_r;
    BigReal xp = sqrt(1 - x * x);
    BigReal j = u_forward(x, ctx);
    BigReal c1 = nth_root(a * a * b * j / 250, 3);

    BigReal ww = pair.w * pair.w_prime;
    BigReal inner = pair.w / x + pair.w_prime / xp - ww / (x * xp);
    BigReal X = b / (250 * a) * (x * x * (1 - x * x)) / (ww * ww) * inner * inner * inner;

    BigReal r = k_inverse(x, ctx);
    BigReal X_eta = b / (250 * a) * a_value(r, ctx).A;
    if (rel_diff(X, X_eta) > ctx.tol(12))
        throw verification_error("solve_from_L: closed form and eta-quotient route disagree");

    SexticInstance inst{a, b, c1};
    SolveReport rep;
    rep.method = SolveMethod::modular;
    rep.alpha = x;
    rep.r = r;
    rep.X = BigComplex(X);
    rep.residual = eq_residual(inst, X, ctx);
    rep.sextic_root = X >= 0 ? BigComplex(nth_root(X, 3)) : BigComplex(-nth_root(-X, 3));
    rep.digits = ctx.digits;
    rep.alpha_alt = xp;
    rep.r_alt = 1 / r;
    return {c1, rep};
}

DesignedInstance instance_from_root(const BigReal& t_in, const BigReal& b_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (t_in == 0 || b_in == 0) throw domain_error("instance_from_root: t and b must be nonzero");
    BigReal t = at_working(t_in, ctx), b = at_working(b_in, ctx);
    BigReal disc = 4 * b * b - 10 * b * t * t + 5 * t * t * t * t;
    if (disc < 0) throw domain_error("instance_from_root: negative discriminant");
    BigReal S = -5 * b + 5 * t * t + sqrt(BigReal(5)) * sqrt(disc);
    BigReal a = S / (10 * t * t * t);
    if (a == 0) throw domain_error("instance_from_root: degenerate leading coefficient");
    BigReal A = 25 * S / b;
    BigReal j = 25000 * t * t * t * t * t * t / (b * S * S);
    BigReal lhs = 3125 + 250 * A + A * A;
    BigReal rhs = nth_root(j, 3) * nth_root(A * A * A * A * A, 3);
    if (rel_diff(lhs, rhs) > ctx.tol(10))
        throw verification_error("instance_from_root: A/j pair violates the cubic identity");
    return {a, A, j};
}

namespace {

// 2F1 by direct summation; parameters positive, 0 < x < 1. Terms may grow
// before the geometric tail kicks in, so the stop rule is relative.
BigReal hyp2f1_direct(const BigReal& a, const BigReal& b, const BigReal& c, const BigReal& x,
                      const PrecCtx& ctx) {
    const BigReal cutoff = pow10(-(ctx.working() + 5));
    BigReal sum = 0, term = 1;
    for (long n = 0; n < 2000000; ++n) {
        sum += term;
        term *= (a + n) * (b + n) / ((c + n) * (1 + n)) * x;
        if (fabs(term) < cutoff * std::max(BigReal(1), fabs(sum))) return sum + term;
    }
    throw convergence_error("hyp2f1_direct: series stalled", fabs(term));
}

}  // namespace

BigReal lagrange_coeff(int n, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (n < 1) throw domain_error("lagrange_coeff: n must be positive");
    BigReal nn(n);
    BigReal hyp = hyp2f1_direct(5 * nn / 6, (5 * nn + 3) / 6, 2 * (nn + 3) / 3, BigReal(1) / 5, ctx);
    BigReal tenpow = boost::multiprecision::exp(-5 * nn / 3 * boost::multiprecision::log(BigReal(10)));
    BigReal sign = n % 2 == 0 ? BigReal(-1) : BigReal(1);
    return BigReal(15625) / 3 * sign * nn * tenpow * hyp * tgamma(5 * nn / 3) / tgamma(2 + 2 * nn / 3);
}

LagrangeSeries solve_series(const BigReal& j_in, int max_terms, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (j_in <= 0) throw domain_error("solve_series: j must be positive");
    if (max_terms < 1) throw domain_error("solve_series: max_terms must be positive");
    BigReal j = at_working(j_in, ctx);

    LagrangeSeries out;
    out.j = j;
    BigReal j13 = nth_root(j, 3);
    BigReal sum = 0, jpow = 1, fact = 1;
    BigReal prev_mag = -1;
    int growth_streak = 0;
    bool reached_floor = false;
    for (int n = 1; n <= max_terms; ++n) {
        BigReal cn = lagrange_coeff(n, ctx);
        out.c.push_back(cn);
        jpow *= j13;
        fact *= n;
        BigReal term = cn * jpow / fact;
        sum += term;
        out.n_terms = n;
        BigReal mag = fabs(term);
        if (prev_mag >= 0) {
            growth_streak = mag > prev_mag ? growth_streak + 1 : 0;
            if (growth_streak >= 5)
                throw convergence_error(
                    "solve_series: terms grew for five consecutive indices (outside the "
                    "convergence region); last |term| = " + to_decimal(mag, 6),
                    mag);
        }
        prev_mag = mag;
        if (mag < ctx.eps() * std::max(BigReal(1), fabs(sum))) {
            reached_floor = true;
            break;
        }
    }
    if (!reached_floor)
        throw convergence_error("solve_series: series did not reach the precision floor within " +
                                    std::to_string(max_terms) + " terms; last |term| = " +
                                    to_decimal(prev_mag, 6),
                                prev_mag);

    out.U0 = sum;
    BigReal root = sqrt(12500 + out.U0);
    out.x0 = BigComplex(-125 + root);

    BigReal base = 125 - root;
    BigComplex fp = base >= 0 ? BigComplex(j13 * boost::multiprecision::exp(
                                               BigReal(5) / 3 * boost::multiprecision::log(base)))
                              : BigComplex(j13) * pow(BigComplex(base), BigReal(5) / 3);
    out.fixed_point_residual = abs(BigComplex(out.U0) - fp);

    // (-1)^{1/3} branch enumeration in the x0 form
    BigComplex x053 = pow(out.x0, BigReal(5) / 3);
    const BigReal pi = const_pi();
    BigReal best = -1;
    for (int k = 0; k < 3; ++k) {
        BigComplex omega = exp(BigComplex(BigReal(0), pi * BigReal(2 * k + 1) / 3));
        BigReal res = abs(BigComplex(out.U0) - BigComplex(j13) * omega * x053);
        if (best < 0 || res < best) best = res;
    }
    out.branch_residual = best;
    return out;
}

BigReal nested_radical(const BigReal& j_in, int depth, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (j_in <= 0) throw domain_error("nested_radical: j must be positive");
    if (depth < 0) throw domain_error("nested_radical: depth must be non-negative");
    BigReal j = at_working(j_in, ctx);
    BigComplex x{BigReal(0), BigReal(0)};
    const BigReal big = pow10(ctx.working());
    for (int i = 0; i < depth; ++i) {
        BigComplex x5 = pow(x, 5);
        x = pow(BigComplex(BigReal(-125) / j) + sqrt(BigComplex(BigReal(12500) / (j * j)) + x5),
                BigReal(1) / 3);
        if (abs(x) > big) throw convergence_error("nested_radical: iteration diverged", abs(x));
    }
    if (depth > 0 && fabs(x.im) > fabs(x.re) / 2)
        throw convergence_error("nested_radical: iterate failed to settle near the real axis",
                                fabs(x.im));
    return x.re;
}

BigReal oracle_match(const SexticInstance& inst_in, const SolveReport& report, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    SexticInstance inst{at_working(inst_in.a, ctx), at_working(inst_in.b, ctx),
                        at_working(inst_in.c1, ctx)};
    // a Y^6 - C1 Y^5 + b Y^3 + b^2/(20a) = 0, ascending coefficients
    std::vector<BigComplex> coeffs{BigComplex(inst.b * inst.b / (20 * inst.a)),
                                   BigComplex(BigReal(0)),
                                   BigComplex(BigReal(0)),
                                   BigComplex(inst.b),
                                   BigComplex(BigReal(0)),
                                   BigComplex(-inst.c1),
                                   BigComplex(inst.a)};
    auto roots = poly_roots(coeffs, ctx);
    BigReal best = -1;
    for (const auto& z : roots) {
        BigReal d = abs(z - report.sextic_root);
        if (best < 0 || d < best) best = d;
    }
    if (best >= ctx.tol(12) * std::max(BigReal(1), abs(report.sextic_root)))
        throw verification_error("oracle_match: solver root is not among the polynomial roots");
    return best;
}

}  // namespace sextic
