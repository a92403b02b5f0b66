// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. Default precision 60 digits, tolerance 1e-48 relative unless a
// criterion states otherwise.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <map>

#include "sextic/elliptic.hpp"
#include "sextic/jinv.hpp"
#include "sextic/rrcf.hpp"
#include "sextic/solver.hpp"
#include "sextic/verify.hpp"
#include "test_util.hpp"

using namespace sextic;
using boost::multiprecision::exp;
using boost::multiprecision::fabs;
using boost::multiprecision::sqrt;

namespace {

struct Criterion {
    int id;
    const char* what;
    bool ok = true;
    ~Criterion() { std::printf("[acceptance] %d %s: %s\n", id, what, ok ? "PASS" : "FAIL"); }
    void require(bool cond) {
        ok = ok && cond;
        CHECK(cond);
    }
    void require_below(const BigReal& value, const BigReal& tol) { require(value < tol); }
};

const BigReal kTol48 = pow10(-48);
const BigReal kTol45 = pow10(-45);

}  // namespace

TEST_CASE("criterion 1: end-to-end solve of the (4,125,132) instance") {
    Criterion c{1, "example-8 end-to-end solve"};
    PrecCtx ctx(60);
    ScopedPrec sp(ctx);
    SexticInstance inst{BigReal(4), BigReal(125), BigReal(132)};
    SolveReport rep = solve_modular(inst, ctx);
    c.require_below(fabs(rep.r - 4), kTol48);
    BigReal s5 = sqrt(BigReal(5));
    BigReal X8 = BigReal(143375) / 16 + BigReal(64125) * s5 / 16 +
                 sqrt(BigReal(20553203125) / 32 + BigReal(9191671875) * s5 / 32) / 2;
    c.require_below(rel_diff(rep.X.re, X8), kTol45);
    BigReal dist = oracle_match(inst, rep, ctx);
    c.require_below(dist / abs(rep.sextic_root), kTol45);
}

TEST_CASE("criterion 2: R(e^{-2pi}) radical by all three methods") {
    Criterion c{2, "R(e^-2pi) three-route radical"};
    PrecCtx ctx(60);
    ScopedPrec sp(ctx);
    BigReal s5 = sqrt(BigReal(5));
    BigReal want = -(1 + s5) / 2 + sqrt((5 + s5) / 2);
    Nome q = nome_from_q(exp(-2 * const_pi()));
    for (RrcfMethod m :
         {RrcfMethod::continued_fraction, RrcfMethod::theta_quotient, RrcfMethod::product_series}) {
        c.require_below(rel_diff(rrcf_eval(q, m, ctx).R, want), kTol48);
    }
}

TEST_CASE("criterion 3: four j routes agree; exact values at r = 1, 2, 4") {
    Criterion c{3, "j-route agreement"};
    PrecCtx ctx(60);
    ScopedPrec sp(ctx);
    for (BigReal r : {BigReal(1), BigReal(2), BigReal(3), BigReal(4)}) {
        BigReal base = j_eval(r, JRoute::modulus, ctx).j;
        for (JRoute route : {JRoute::eta_quotient, JRoute::rrcf, JRoute::beta}) {
            c.require_below(rel_diff(j_eval(r, route, ctx).j, base), kTol48);
        }
    }
    c.require_below(rel_diff(j_eval(BigReal(1), JRoute::modulus, ctx).j, BigReal(1728)), kTol48);
    c.require_below(rel_diff(j_eval(BigReal(2), JRoute::modulus, ctx).j, BigReal(8000)), kTol48);
    c.require_below(rel_diff(j_eval(BigReal(4), JRoute::modulus, ctx).j, BigReal(287496)), kTol48);
}

TEST_CASE("criterion 4: U(sqrt3/2) and the (1, 3, 26/(5 cbrt3)) instance") {
    Criterion c{4, "example-1 inverse map and solve"};
    PrecCtx ctx(60);
    ScopedPrec sp(ctx);
    c.require_below(rel_diff(u_forward(sqrt(BigReal(3)) / 2, ctx), BigReal(35152) / 9), kTol48);
    SexticInstance inst{BigReal(1), BigReal(3), 26 / (5 * nth_root(BigReal(3), 3))};
    SolveReport rep = solve_modular(inst, ctx);
    c.require_below(rep.residual, kTol48);
}

TEST_CASE("criterion 5: ten closed-form Y values") {
    Criterion c{5, "closed-form Y suite"};
    PrecCtx ctx(60);
    ResidualReport rep = conjecture_suite({BigReal(1)}, ctx, RunMode::parallel);
    int seen = 0;
    for (const auto& e : rep.entries) {
        if (e.id.rfind("y_closed_form_", 0) == 0) {
            ++seen;
            c.require_below(e.residual, kTol45);
        }
    }
    c.require(seen == 10);
}

TEST_CASE("criterion 6: singular moduli radicals and the 25-power chain") {
    Criterion c{6, "k_5/k_25 radicals and k_125/k_625 chain"};
    PrecCtx ctx(80);
    ScopedPrec sp(ctx);
    BigReal s5 = sqrt(BigReal(5));
    BigReal k5 = k_modulus(BigReal(5), ctx), k15 = k_modulus(BigReal(1) / 5, ctx);
    BigReal k25 = k_modulus(BigReal(25), ctx), k1 = k_modulus(BigReal(1), ctx);
    c.require_below(
        rel_diff(k5, sqrt((9 + 4 * s5 - 2 * sqrt(38 + 17 * s5)) / (18 + 8 * s5))), kTol48);
    c.require_below(
        rel_diff(k15, sqrt((9 + 4 * s5 + 2 * sqrt(38 + 17 * s5)) / (18 + 8 * s5))), kTol48);
    c.require_below(
        rel_diff(k25, 1 / sqrt(2 * (51841 + 23184 * s5 +
                                    12 * sqrt(BigReal(37325880) + 16692641 * s5)))),
        kTol48);
    BigReal k125 = p_iterate(BigReal(5), k5, k15, 1, ctx);
    c.require_below(fabs(k125 - k_modulus(BigReal(125), ctx)), pow10(-40));
    BigReal k625 = p_iterate(BigReal(25), k25, k1, 1, ctx);
    c.require_below(fabs(k625 - k_modulus(BigReal(625), ctx)), pow10(-40));
}

TEST_CASE("criterion 7: inversion-series machinery") {
    Criterion c{7, "series coefficients and the j=800 solve"};
    PrecCtx ctx(60);
    ScopedPrec sp(ctx);
    BigReal c1 = lagrange_coeff(1, ctx);
    BigReal c1_rad = boost::multiprecision::exp(BigReal(5) / 3 *
                                                boost::multiprecision::log(125 - 50 * sqrt(BigReal(5))));
    c.require_below(rel_diff(c1, c1_rad), kTol48);
    {
        PrecCtx twice(120, ctx.guard);
        ScopedPrec sp2(twice);
        BigReal h = pow10(-30);
        auto f2 = [&](const BigReal& a) {
            return boost::multiprecision::exp(BigReal(10) / 3 *
                                              boost::multiprecision::log(125 - sqrt(12500 + a)));
        };
        BigReal fd2 = (f2(h) - f2(-h)) / (2 * h);
        c.require_below(rel_diff(lagrange_coeff(2, twice), fd2), pow10(-30));
        auto f3 = [&](const BigReal& a) {
            BigReal base = 125 - sqrt(12500 + a);
            BigReal b2 = base * base;
            return b2 * b2 * base;
        };
        BigReal h3 = pow10(-20);
        BigReal fd3 = (f3(h3) - 2 * f3(BigReal(0)) + f3(-h3)) / (h3 * h3);
        c.require_below(rel_diff(lagrange_coeff(3, twice), fd3), pow10(-30));
    }
    LagrangeSeries ser = solve_series(BigReal(800), 3000, ctx);  // throws if decay fails
    c.require_below(ser.fixed_point_residual, pow10(-30));
}

TEST_CASE("criterion 8: the L = 1/3 parametric path") {
    Criterion c{8, "L-parametrized pair and closed-form X"};
    PrecCtx ctx(60);
    ScopedPrec sp(ctx);
    ModulusPair pair = pair_from_L(BigReal(1) / 3, ctx);
    c.require_below(modular5_residual(pair, ctx), kTol48);
    auto [c1, rep] = solve_from_L(BigReal(1) / 3, BigReal(1), BigReal(1), ctx);
    (void)c1;
    BigReal X_eta = a_value(rep.r, ctx).A / 250;
    c.require_below(rel_diff(rep.X.re, X_eta), kTol45);
}

TEST_CASE("criterion 9: identity suite with residual scaling") {
    Criterion c{9, "identity suite and precision scaling"};
    std::vector<BigReal> grid{BigReal(1) / 5, BigReal(1), BigReal(2), BigReal(3), BigReal(4),
                              BigReal(5)};
    PrecCtx lo(60), hi(80);
    ResidualReport rep60 = identity_suite(grid, lo, RunMode::parallel);
    c.require(rep60.all_passed());
    ResidualReport rep80 = identity_suite(grid, hi, RunMode::parallel);
    c.require(rep80.all_passed());
    REQUIRE(rep60.entries.size() == rep80.entries.size());
    // Compare the worst residual per identity across the grid; pointwise
    // ratios fluctuate by a few orders with rounding luck.
    std::map<std::string, BigReal> worst60, worst80;
    for (std::size_t i = 0; i < rep60.entries.size(); ++i) {
        const auto& e60 = rep60.entries[i];
        const auto& e80 = rep80.entries[i];
        REQUIRE(e60.id == e80.id);
        if (worst60[e60.id] < e60.residual) worst60[e60.id] = e60.residual;
        if (worst80[e80.id] < e80.residual) worst80[e80.id] = e80.residual;
    }
    for (const auto& [id, r60] : worst60) {
        if (r60 == 0) continue;
        // the derivative identity is finite-difference limited: 10 digits of
        // shrink; everything else gains the full 20
        BigReal shrink = id == "rrcf_derivative" ? pow10(-8) : pow10(-18);
        c.require(worst80[id] < r60 * shrink);
    }
}

TEST_CASE("criterion 10: conjectures are reported, never asserted") {
    Criterion c{10, "conjecture reporting"};
    PrecCtx ctx(60);
    ResidualReport rep = conjecture_suite({BigReal(1), BigReal(2), BigReal(3)}, ctx,
                                          RunMode::parallel);
    c.require(rep.all_passed());
    std::map<std::string, int> report_counts;
    for (const auto& e : rep.entries) {
        if (e.status == EntryStatus::report_only) ++report_counts[e.id];
    }
    // the four conjectural relations are present for each grid point and
    // carried as report-only entries
    c.require(report_counts["y_product"] == 3);
    c.require(report_counts["n_doubling"] == 3);
    c.require(report_counts["n_tripling"] == 3);
    c.require(report_counts["x_doubling"] == 3);
    // nothing outside the declared scope is evaluated
    for (const auto& e : rep.entries) {
        c.require(e.id.rfind("y_closed_form_", 0) == 0 || e.id == "y_ratio_68_17" ||
                  e.id == "y_product_self_dual" || e.id == "y_product" || e.id == "n_doubling" ||
                  e.id == "n_tripling" || e.id == "x_doubling");
    }
}
