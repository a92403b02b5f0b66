#pragma once

#include <utility>
#include <vector>

#include "sextic/kernel.hpp"

namespace sextic {

/// Coefficients of b^2/(20a) + b X + a X^2 = C1 X^{5/3}; the modular solve
/// targets j = 250 C1^3/(a^2 b).
struct SexticInstance {
    BigReal a, b, c1;
    BigReal j_target() const;
};

enum class SolveMethod { modular, lagrange_series };

struct SolveReport {
    SolveMethod method = SolveMethod::modular;
    BigReal alpha;          // singular modulus picked by the inverse map
    BigReal r;              // k_inverse(alpha)
    BigComplex X;           // solution (real for the modular path)
    BigReal residual;       // |b^2/(20a) + bX + aX^2 - C1 X^{5/3}|
    BigComplex sextic_root; // X^{1/3}, a root of the degree-6 form
    int digits = 0;
    BigReal alpha_alt;      // complementary modulus branch (same j)
    BigReal r_alt;          // = 1/r
};

/// Modular path: alpha = u_inverse(j_target), r = k_inverse(alpha),
/// X = (b/250a) A_r. Requires j_target >= 1728.
SolveReport solve_modular(const SexticInstance& inst, const PrecCtx& ctx);

/// Parametric path: builds the modulus pair from L, takes j = U(k_r),
/// C1 = (a^2 b j / 250)^{1/3}, and the closed-form X from the pair; the
/// eta-quotient route must agree.
std::pair<BigReal, SolveReport> solve_from_L(const BigReal& L, const BigReal& a, const BigReal& b,
                                             const PrecCtx& ctx);

/// Designs an instance with prescribed sextic-variable root t (and C1 = 1):
///   S = -5b + 5t^2 + sqrt5 sqrt(4b^2 - 10bt^2 + 5t^4),
///   a = S/(10 t^3),  A = 25 S / b,  j = 25000 t^6/(b S^2).
struct DesignedInstance {
    BigReal a, A, j;
};
DesignedInstance instance_from_root(const BigReal& t, const BigReal& b, const PrecCtx& ctx);

/// n-th inversion-series coefficient:
/// c_n = (5^6/3)(-1)^{n+1} n 10^{-5n/3}
///       2F1(5n/6, (5n+3)/6; 2(n+3)/3; 1/5) Gamma(5n/3)/Gamma(2+2n/3).
BigReal lagrange_coeff(int n, const PrecCtx& ctx);

struct LagrangeSeries {
    BigReal j;
    int n_terms = 0;                  // terms actually summed
    std::vector<BigReal> c;           // coefficients used
    BigReal U0;                       // sum c_n j^{n/3}/n!
    BigComplex x0;                    // -125 + sqrt(12500 + U0)
    BigReal fixed_point_residual;     // |U0 - j^{1/3}(125-sqrt(12500+U0))^{5/3}|
    BigReal branch_residual;          // min over cube roots of -1 in the x0 form
};

/// Series solution of the fixed-point form; valid in the empirical
/// convergence region (terms must decay; five consecutive growing terms raise
/// a convergence_error, as does failing to reach the precision floor within
/// max_terms).
LagrangeSeries solve_series(const BigReal& j, int max_terms, const PrecCtx& ctx);

/// Iterates x -> (-125/j + sqrt(12500/j^2 + x^5))^{1/3} from 0 to the given
/// depth (principal complex branches; the limit is real). Converges to
/// (A_r/j)^{1/3} for the r matching j.
BigReal nested_radical(const BigReal& j, int depth, const PrecCtx& ctx);

/// Cross-checks the report against the raw degree-6 polynomial via the
/// simultaneous-iteration root oracle; returns the distance from sextic_root
/// to the nearest polynomial root and fails if it exceeds
/// 10^-(digits-12) * |root|.
BigReal oracle_match(const SexticInstance& inst, const SolveReport& report, const PrecCtx& ctx);

}  // namespace sextic
