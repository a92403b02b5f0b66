#include "sextic/verify.hpp"

#include "sextic/elliptic.hpp"
#include "sextic/jinv.hpp"
#include "sextic/qseries.hpp"
#include "sextic/rrcf.hpp"

#include <algorithm>

namespace sextic {

using boost::multiprecision::exp;
using boost::multiprecision::fabs;
using boost::multiprecision::log;
using boost::multiprecision::sqrt;

bool ResidualReport::all_passed() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const ResidualEntry& e) { return e.status != EntryStatus::fail; });
}

std::vector<const ResidualEntry*> ResidualReport::failures() const {
    std::vector<const ResidualEntry*> out;
    for (const auto& e : entries)
        if (e.status == EntryStatus::fail) out.push_back(&e);
    return out;
}

namespace {

ResidualEntry asserted(std::string id, BigReal r, BigReal residual, BigReal tolerance) {
    EntryStatus st = residual < tolerance ? EntryStatus::pass : EntryStatus::fail;
    return {std::move(id), std::move(r), std::move(residual), std::move(tolerance), st};
}

ResidualEntry reported(std::string id, BigReal r, BigReal residual) {
    return {std::move(id), std::move(r), std::move(residual), BigReal(0), EntryStatus::report_only};
}

std::vector<ResidualEntry> identities_at(const BigReal& r_in, const PrecCtx& ctx) {
    std::vector<ResidualEntry> out;
    const BigReal r = at_working(r_in, ctx);
    const BigReal tol = ctx.tol(10);
    const BigReal fd_tol = pow10(-(ctx.digits / 2 - 8));

    Nome q = nome_from_r(r, ctx);
    BigReal k = k_modulus(r, ctx);
    BigReal kp = sqrt(1 - k * k);
    BigReal k25 = k_modulus(25 * r, ctx);
    BigReal A = a_value(r, ctx).A;
    BigReal j_eta = j_eval(r, JRoute::eta_quotient, ctx).j;

    {  // RRCF product link: 1/R^5 - 11 - R^5 = f(-q)^6/(q f(-q^5)^6)
        BigReal R = rrcf_eval(q, RrcfMethod::continued_fraction, ctx).R;
        BigReal z = R * R * R * R * R;
        BigReal f1 = f_minus(q, ctx);
        BigReal f5 = f_minus(nome_from_q(q.q * q.q * q.q * q.q * q.q), ctx);
        BigReal c1 = f1 * f1 * f1, c5 = f5 * f5 * f5;
        BigReal F = c1 * c1 / (q.q * c5 * c5);
        out.push_back(asserted("rrcf_product_link", r, fabs(1 / z - 11 - z - F) / std::max(F, BigReal(1)), tol));
    }
    {  // period-ratio definition of k_r
        BigReal ratio = ellipK(kp, ctx) / ellipK(k, ctx);
        out.push_back(asserted("modulus_period_ratio", r, fabs(ratio - sqrt(r)) / sqrt(r), tol));
    }
    {  // pair form of A_r
        BigReal k25p = sqrt(1 - k25 * k25);
        BigReal w = sqrt(k * k25), wp = sqrt(kp * k25p);
        BigReal inner = w / k + wp / kp - w * wp / (k * kp);
        BigReal pair_form = (k * kp) * (k * kp) / ((w * wp) * (w * wp)) * inner * inner * inner;
        out.push_back(asserted("a_pair_bridge", r, fabs(A - pair_form) / A, tol));
    }
    {  // the A-j cubic, j from the independent eta route
        BigReal lhs = 3125 + 250 * A + A * A;
        BigReal rhs = nth_root(j_eta, 3) * nth_root(A * A * A * A * A, 3);
        out.push_back(asserted("a_j_cubic", r, fabs(lhs - rhs) / rhs, tol));
    }
    {  // modulus form of j
        BigReal jm = j_eval(r, JRoute::modulus, ctx).j;
        out.push_back(asserted("j_modulus_bridge", r, fabs(jm - j_eta) / j_eta, tol));
    }
    {  // fifth-degree modular equation
        out.push_back(asserted("modular5", r, modular5_residual(pair_from_moduli(k, k25), ctx), tol));
    }
    {  // duplication cubic between R(q) and R(q^2)
        BigReal u = rrcf_eval(q, RrcfMethod::continued_fraction, ctx).R;
        BigReal v = rrcf_eval(nome_from_q(q.q * q.q), RrcfMethod::continued_fraction, ctx).R;
        out.push_back(asserted("duplication", r, fabs(u * v * v * v + u * u * u * v * v - v + u * u), tol));
    }
    {  // derivative identity, finite-difference limited
        BigReal res = n_derivative_residual(q, ctx);
        BigReal scale = f_minus(q, ctx);
        scale = scale * scale;
        scale *= scale;
        scale /= nth_root(q.q * q.q * q.q * q.q * q.q, 6);
        out.push_back(asserted("rrcf_derivative", r, res / scale, fd_tol));
    }
    {  // fifth-base bridge: U(k_r) = 432/(beta(1-beta)) with beta from 2F1
        BigReal jb = j_eval(r, JRoute::beta, ctx).j;
        BigReal uk = u_forward(k, ctx);
        out.push_back(asserted("beta_bridge", r, fabs(uk - jb) / uk, tol));
    }
    return out;
}

std::vector<ResidualEntry> conjectures_at(const BigReal& r_in, const PrecCtx& ctx) {
    std::vector<ResidualEntry> out;
    const BigReal r = at_working(r_in, ctx);
    // Y product law: (1/8)A_{r/5} * (1/8)A_{1/(5r)} vs 125/64
    BigReal prod = a_value(r / 5, ctx).A * a_value(1 / (5 * r), ctx).A / 64;
    out.push_back(reported("y_product", r, fabs(prod - BigReal(125) / 64) / (BigReal(125) / 64)));

    Nome q = nome_from_r(r, ctx);
    BigReal v = n_value(q, ctx);
    BigReal u = n_value(nome_from_q(q.q * q.q), ctx);
    {  // N(q) doubling relation
        BigReal u2 = u * u, v2 = v * v, u6 = u2 * u2 * u2, v6 = v2 * v2 * v2;
        BigReal res = 5 * u6 - u2 * v2 - 125 * u2 * u2 * v2 * v2 + 5 * v6;
        BigReal scale = std::max({fabs(5 * u6), fabs(u2 * v2), fabs(125 * u2 * u2 * v2 * v2), fabs(5 * v6)});
        out.push_back(reported("n_doubling", r, fabs(res) / scale));
    }
    {  // N(q) tripling relation (stated with "?="; large residual is expected)
        BigReal h = n_value(nome_from_q(q.q * q.q * q.q), ctx);
        BigReal h3 = h * h * h, v3 = v * v * v;
        BigReal h9 = h3 * h3 * h3, v9 = v3 * v3 * v3;
        BigReal h12 = h9 * h3, v12 = v9 * v3;
        BigReal res = 125 * h12 + h3 * v3 + 1125 * h9 * v3 + 1125 * h3 * v9 + 1953125 * h9 * v9 - 125 * v12;
        BigReal scale = std::max({fabs(125 * h12), fabs(1125 * h9 * v3), fabs(1125 * h3 * v9),
                                  fabs(1953125 * h9 * v9), fabs(125 * v12)});
        out.push_back(reported("n_tripling", r, fabs(res) / scale));
    }
    {  // X doubling relation (a = b = 1)
        BigReal Xr = a_value(r, ctx).A / 250;
        BigReal X4r = a_value(4 * r, ctx).A / 250;
        BigReal p13 = nth_root(Xr * X4r, 3);
        BigReal res = nth_root(BigReal(4), 3) * p13 + 10 * nth_root(BigReal(2), 3) * p13 * p13 -
                      2 * (Xr + X4r);
        out.push_back(reported("x_doubling", r, fabs(res) / (2 * (Xr + X4r))));
    }
    return out;
}

}  // namespace

ResidualReport identity_suite(const std::vector<BigReal>& grid, const PrecCtx& ctx, RunMode mode) {
    ScopedPrec sp(ctx);
    ResidualReport report;
    report.suite = "identities";
    report.digits = ctx.digits;
    report.grid = grid;
    std::vector<std::vector<ResidualEntry>> slots(grid.size());
    for_each_index(grid.size(), mode, [&](std::size_t i) { slots[i] = identities_at(grid[i], ctx); });
    for (auto& s : slots)
        for (auto& e : s) report.entries.push_back(std::move(e));
    return report;
}

ResidualReport conjecture_suite(const std::vector<BigReal>& grid, const PrecCtx& ctx, RunMode mode) {
    ScopedPrec sp(ctx);
    ResidualReport report;
    report.suite = "conjectures";
    report.digits = ctx.digits;
    report.grid = grid;

    const BigReal tol15 = ctx.tol(15);
    const BigReal s5 = sqrt(BigReal(5)), s2 = sqrt(BigReal(2)), s3 = sqrt(BigReal(3));
    const BigReal s10 = sqrt(BigReal(10)), s85 = sqrt(BigReal(85));
    struct YCase {
        int r;
        BigReal value;
    };
    const std::vector<YCase> ycases = {
        {1, 5 * s5 / 8},
        {2, BigReal(5) / 8 * (5 + 2 * s5)},
        {3, BigReal(5) / 16 * (25 + 11 * s5)},
        {4, BigReal(5) / 16 * (25 + 13 * s5 + 5 * sqrt(58 + 26 * s5))},
        {5, BigReal(125) / 8 * (2 + s5)},
        {6, BigReal(5) / 8 * (50 + 35 * s2 + 3 * sqrt(5 * (99 + 70 * s2)))},
        {9, BigReal(5) / 8 * (225 + 104 * s5 + 10 * sqrt(1047 + 468 * s5))},
        {12, BigReal(5) / 16 * (1690 + 975 * s3 + 29 * sqrt(6755 + 3900 * s3))},
        {14, BigReal(5) / 8 * (1850 + 585 * s10 + 7 * sqrt(5 * (27379 + 8658 * s10)))},
        {17, BigReal(5) / 8 * (5360 + 585 * s85 + 4 * sqrt(3613670 + 391950 * s85))},
    };

    std::vector<std::vector<ResidualEntry>> yslots(ycases.size());
    for_each_index(ycases.size(), mode, [&](std::size_t i) {
        const auto& yc = ycases[i];
        BigReal y = a_value(BigReal(yc.r) / 5, ctx).A / 8;
        yslots[i] = {asserted("y_closed_form_r" + std::to_string(yc.r), BigReal(yc.r) / 5,
                              fabs(y - yc.value) / yc.value, tol15)};
    });
    for (auto& s : yslots)
        for (auto& e : s) report.entries.push_back(std::move(e));

    {  // ratio between the r=68 and r=17 values against its nested radical
        BigReal x = BigReal(2891581250) + BigReal(313636050) * s85 +
                    BigReal(12960) * sqrt(BigReal(99557521554) + BigReal(10798529365) * s85);
        BigReal radical = (sqrt(x + 4) + sqrt(x)) / 2;
        BigReal ratio = a_value(BigReal(68) / 5, ctx).A / a_value(BigReal(17) / 5, ctx).A;
        report.entries.push_back(asserted("y_ratio_68_17", BigReal(68) / 5,
                                          fabs(ratio - radical) / radical, tol15));
    }
    {  // self-dual point of the product law is exact
        BigReal a15 = a_value(BigReal(1) / 5, ctx).A;
        report.entries.push_back(
            asserted("y_product_self_dual", BigReal(1), fabs(a15 * a15 - 125) / 125, ctx.tol(10)));
    }

    std::vector<std::vector<ResidualEntry>> slots(grid.size());
    for_each_index(grid.size(), mode, [&](std::size_t i) { slots[i] = conjectures_at(grid[i], ctx); });
    for (auto& s : slots)
        for (auto& e : s) report.entries.push_back(std::move(e));
    return report;
}

nlohmann::ordered_json report_to_json(const ResidualReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["digits"] = report.digits;
    j["grid"] = nlohmann::ordered_json::array();
    for (const auto& r : report.grid) j["grid"].push_back(to_decimal(r, report.digits));
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : report.entries) {
        nlohmann::ordered_json je;
        je["id"] = e.id;
        je["r"] = to_decimal(e.r, report.digits);
        je["residual"] = to_decimal(e.residual, 8);
        je["status"] = e.status == EntryStatus::pass     ? "pass"
                       : e.status == EntryStatus::fail   ? "fail"
                                                         : "report-only";
        j["entries"].push_back(std::move(je));
    }
    return j;
}

}  // namespace sextic
