// Command-line surface for the sextic solver and its verification suites.
//
// Subcommands:
//   solve    --a A --b B --c1 C [--method modular|series]
//   eval     --fn rrcf|eta|f|k|j|A|K|N (--at V | --r R)
//   verify   --suite identities|conjectures --grid r1,r2,...
//   examples --id 1|3|4|5|6|7|8|10|all
//   table    --r r1,r2,... --out FILE.csv
//
// Exit codes: 0 success, 2 invalid input, 3 convergence failure,
// 4 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sextic/cache.hpp"
#include "sextic/elliptic.hpp"
#include "sextic/jinv.hpp"
#include "sextic/qseries.hpp"
#include "sextic/rrcf.hpp"
#include "sextic/solver.hpp"
#include "sextic/verify.hpp"

using nlohmann::ordered_json;
using namespace sextic;

namespace {

using boost::multiprecision::exp;
using boost::multiprecision::fabs;
using boost::multiprecision::sqrt;

struct Config {
    int digits = 60;
    std::string output = "json";
    std::string cache_dir;
};

BigReal parse_nome_literal(const std::string& s, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (s.rfind("e^-", 0) == 0) {
        std::string rest = s.substr(3);
        BigReal mult;
        if (rest.rfind("2pi", 0) == 0) {
            mult = 2;
            rest = rest.substr(3);
        } else if (rest.rfind("pi", 0) == 0) {
            mult = 1;
            rest = rest.substr(2);
        } else {
            throw domain_error("cannot parse nome literal '" + s + "'");
        }
        BigReal rr = 1;
        if (!rest.empty()) {
            if (rest.rfind("*sqrt(", 0) == 0 && rest.back() == ')')
                rr = parse_real(rest.substr(6, rest.size() - 7));
            else
                throw domain_error("cannot parse nome literal '" + s + "'");
        }
        if (rr <= 0) throw domain_error("nome literal requires a positive r");
        return exp(-mult * const_pi() * sqrt(rr));
    }
    return parse_real(s);
}

std::vector<BigReal> parse_grid(const std::string& csv) {
    std::vector<BigReal> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(parse_real(tok));
    }
    if (out.empty()) throw domain_error("empty grid");
    return out;
}

void emit(const Config& cfg, const ordered_json& j) {
    if (cfg.output == "text") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << j.dump() << "\n";
    }
}

ordered_json report_json(const SolveReport& rep, int digits) {
    ordered_json j;
    j["method"] = rep.method == SolveMethod::modular ? "modular" : "lagrange_series";
    if (rep.method == SolveMethod::modular) {
        j["alpha"] = to_decimal(rep.alpha, digits);
        j["alpha_alt"] = to_decimal(rep.alpha_alt, digits);
        j["r"] = to_decimal(rep.r, digits);
        j["r_alt"] = to_decimal(rep.r_alt, digits);
    }
    j["X"] = to_decimal(rep.X.re, digits);
    if (rep.X.im != 0) j["X_imag"] = to_decimal(rep.X.im, digits);
    j["sextic_root"] = to_decimal(rep.sextic_root.re, digits);
    j["residual"] = to_decimal(rep.residual, 8);
    j["digits"] = rep.digits;
    return j;
}

int run_solve(const Config& cfg, const std::string& a_s, const std::string& b_s,
              const std::string& c1_s, const std::string& method) {
    PrecCtx ctx(cfg.digits);
    ScopedPrec sp(ctx);
    SexticInstance inst{parse_real(a_s), parse_real(b_s), parse_real(c1_s)};
    ordered_json out;
    out["input"] = {{"a", a_s}, {"b", b_s}, {"c1", c1_s}};
    out["j_target"] = to_decimal(inst.j_target(), cfg.digits);
    if (method == "modular") {
        SolveReport rep = solve_modular(inst, ctx);
        oracle_match(inst, rep, ctx);
        out["result"] = report_json(rep, cfg.digits);
    } else {
        LagrangeSeries ser = solve_series(inst.j_target(), 4000, ctx);
        BigReal X = inst.b / (250 * inst.a) * ser.x0.re;
        out["result"]["method"] = "lagrange_series";
        out["result"]["n_terms"] = ser.n_terms;
        out["result"]["U0"] = to_decimal(ser.U0, cfg.digits);
        out["result"]["x0"] = to_decimal(ser.x0.re, cfg.digits);
        out["result"]["X"] = to_decimal(X, cfg.digits);
        out["result"]["fixed_point_residual"] = to_decimal(ser.fixed_point_residual, 8);
        out["result"]["branch_residual"] = to_decimal(ser.branch_residual, 8);
    }
    emit(cfg, out);
    return 0;
}

int run_eval(const Config& cfg, const std::string& fn, const std::string& at, const std::string& r_s,
             const std::string& route, bool half_shift) {
    PrecCtx ctx(cfg.digits);
    ScopedPrec sp(ctx);
    ordered_json out;
    out["input"] = {{"fn", fn}};
    if (!at.empty()) out["input"]["at"] = at;
    if (!r_s.empty()) out["input"]["r"] = r_s;
    BigReal value;
    if (fn == "rrcf" || fn == "f" || fn == "N") {
        if (at.empty()) throw domain_error("eval --fn " + fn + " requires --at");
        Nome q = nome_from_q(parse_nome_literal(at, ctx));
        if (fn == "rrcf")
            value = rrcf_eval(q, RrcfMethod::continued_fraction, ctx).R;
        else if (fn == "f")
            value = f_minus(q, ctx);
        else
            value = n_value(q, ctx);
    } else if (fn == "eta") {
        if (r_s.empty()) throw domain_error("eval --fn eta requires --r");
        value = eta(parse_real(r_s), half_shift, ctx).re;
    } else if (fn == "k") {
        if (r_s.empty()) throw domain_error("eval --fn k requires --r");
        value = k_modulus(parse_real(r_s), ctx);
    } else if (fn == "A") {
        if (r_s.empty()) throw domain_error("eval --fn A requires --r");
        value = a_value(parse_real(r_s), ctx).A;
    } else if (fn == "j") {
        if (r_s.empty()) throw domain_error("eval --fn j requires --r");
        JRoute jr = route == "eta"      ? JRoute::eta_quotient
                    : route == "rrcf"   ? JRoute::rrcf
                    : route == "beta"   ? JRoute::beta
                                        : JRoute::modulus;
        value = j_eval(parse_real(r_s), jr, ctx).j;
    } else if (fn == "K") {
        if (at.empty()) throw domain_error("eval --fn K requires --at");
        value = ellipK(parse_real(at), ctx);
    } else {
        throw domain_error("unknown eval function '" + fn + "'");
    }
    out["result"] = to_decimal(value, cfg.digits);
    out["digits"] = cfg.digits;
    emit(cfg, out);
    return 0;
}

int run_verify(const Config& cfg, const std::string& suite, const std::string& grid_s, bool serial) {
    PrecCtx ctx(cfg.digits);
    ScopedPrec sp(ctx);
    auto grid = parse_grid(grid_s);
    RunMode mode = serial ? RunMode::serial : RunMode::parallel;
    ResidualReport rep = suite == "conjectures" ? conjecture_suite(grid, ctx, mode)
                                                : identity_suite(grid, ctx, mode);
    emit(cfg, report_to_json(rep));
    return rep.all_passed() ? 0 : 4;
}

// ---- bundled worked examples ----------------------------------------------

struct Check {
    std::string name;
    BigReal residual;
    BigReal tolerance;
    bool pass;
};

ordered_json checks_json(const std::vector<Check>& checks, int digits) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name},
                       {"residual", to_decimal(c.residual, 8)},
                       {"tolerance", to_decimal(c.tolerance, 4)},
                       {"pass", c.pass}});
    }
    (void)digits;
    return arr;
}

void add_check(std::vector<Check>& v, const std::string& name, const BigReal& residual,
               const BigReal& tol) {
    v.push_back({name, residual, tol, residual < tol});
}

ordered_json example_1(const PrecCtx& ctx) {
    std::vector<Check> checks;
    BigReal c1 = 26 / (5 * nth_root(BigReal(3), 3));
    SexticInstance inst{BigReal(1), BigReal(3), c1};
    SolveReport rep = solve_modular(inst, ctx);
    add_check(checks, "alpha = 1/2 (complement sqrt3/2)", fabs(rep.alpha - BigReal(1) / 2), ctx.tol(12));
    add_check(checks, "alpha_alt = sqrt3/2", fabs(rep.alpha_alt - sqrt(BigReal(3)) / 2), ctx.tol(12));
    add_check(checks, "equation residual", rep.residual, ctx.tol(12));
    add_check(checks, "root oracle", oracle_match(inst, rep, ctx), ctx.tol(12));
    ordered_json j;
    j["id"] = 1;
    j["r"] = to_decimal(rep.r, ctx.digits);
    j["X"] = to_decimal(rep.X.re, ctx.digits);
    j["checks"] = checks_json(checks, ctx.digits);
    return j;
}

ordered_json example_3(const PrecCtx& ctx) {
    std::vector<Check> checks;
    LagrangeSeries ser = solve_series(BigReal(800), 4000, ctx);
    add_check(checks, "fixed-point residual", ser.fixed_point_residual, pow10(-30));
    add_check(checks, "branch residual", ser.branch_residual, pow10(-30));
    ordered_json j;
    j["id"] = 3;
    j["n_terms"] = ser.n_terms;
    j["U0"] = to_decimal(ser.U0, ctx.digits);
    j["x0"] = to_decimal(ser.x0.re, ctx.digits);
    j["checks"] = checks_json(checks, ctx.digits);
    return j;
}

ordered_json example_4(const PrecCtx& ctx) {
    std::vector<Check> checks;
    BigReal L = BigReal(1) / 3;
    ModulusPair pair = pair_from_L(L, ctx);
    add_check(checks, "w = (1/3) sqrt(11/78)", fabs(pair.w - sqrt(BigReal(11) / 78) / 3), ctx.tol(12));
    add_check(checks, "fifth-degree modular equation", modular5_residual(pair, ctx), ctx.tol(10));
    auto [c1, rep] = solve_from_L(L, BigReal(1), BigReal(1), ctx);
    add_check(checks, "equation residual", rep.residual, ctx.tol(12));
    ordered_json j;
    j["id"] = 4;
    j["k_r"] = to_decimal(pair.k_r, ctx.digits);
    j["k_25r"] = to_decimal(pair.k25_r, ctx.digits);
    j["r"] = to_decimal(rep.r, ctx.digits);
    j["C1"] = to_decimal(c1, ctx.digits);
    j["X"] = to_decimal(rep.X.re, ctx.digits);
    j["checks"] = checks_json(checks, ctx.digits);
    return j;
}

ordered_json example_5(const PrecCtx& ctx) {
    std::vector<Check> checks;
    BigReal s5 = sqrt(BigReal(5));
    BigReal k15_rad = sqrt((9 + 4 * s5 + 2 * sqrt(38 + 17 * s5)) / (18 + 8 * s5));
    BigReal k5_rad = sqrt((9 + 4 * s5 - 2 * sqrt(38 + 17 * s5)) / (18 + 8 * s5));
    BigReal k15 = k_modulus(BigReal(1) / 5, ctx), k5 = k_modulus(BigReal(5), ctx);
    add_check(checks, "k_{1/5} radical", rel_diff(k15, k15_rad), ctx.tol(12));
    add_check(checks, "k_5 radical", rel_diff(k5, k5_rad), ctx.tol(12));
    BigReal k125 = p_iterate(BigReal(5), k5, k15, 1, ctx);
    add_check(checks, "k_125 chain vs theta", rel_diff(k125, k_modulus(BigReal(125), ctx)), ctx.tol(15));
    ordered_json j;
    j["id"] = 5;
    j["k_125"] = to_decimal(k125, ctx.digits);
    j["checks"] = checks_json(checks, ctx.digits);
    return j;
}

ordered_json example_6(const PrecCtx& ctx_in) {
    // the k_625 comparison needs at least 80 digits
    PrecCtx ctx(std::max(ctx_in.digits, 80), ctx_in.guard);
    ScopedPrec sp(ctx);
    std::vector<Check> checks;
    BigReal s5 = sqrt(BigReal(5));
    BigReal k25_rad = 1 / sqrt(2 * (51841 + 23184 * s5 + 12 * sqrt(BigReal(37325880) + 16692641 * s5)));
    BigReal k1 = k_modulus(BigReal(1), ctx), k25 = k_modulus(BigReal(25), ctx);
    add_check(checks, "k_1 = 1/sqrt2", rel_diff(k1, 1 / sqrt(BigReal(2))), ctx.tol(12));
    add_check(checks, "k_25 radical", rel_diff(k25, k25_rad), ctx.tol(12));
    BigReal k625 = p_iterate(BigReal(25), k25, k1, 1, ctx);
    add_check(checks, "k_625 chain vs theta", rel_diff(k625, k_modulus(BigReal(625), ctx)), pow10(-40));
    ordered_json j;
    j["id"] = 6;
    j["digits_used"] = ctx.digits;
    j["k_625"] = to_decimal(k625, ctx.digits);
    j["checks"] = checks_json(checks, ctx.digits);
    return j;
}

ordered_json example_7(const PrecCtx& ctx) {
    std::vector<Check> checks;
    BigReal k1 = k_modulus(BigReal(1), ctx), k25 = k_modulus(BigReal(25), ctx);
    BigReal kp1 = sqrt(1 - k1 * k1), kp25 = sqrt(1 - k25 * k25);
    BigReal w = sqrt(k1 * k25), wp = sqrt(kp1 * kp25);
    BigReal a = (k1 * kp1) * (k1 * kp1), b = (w * wp) * (w * wp);
    BigReal c1 = nth_root(a * a * b * 1728 / 250, 3);
    SexticInstance inst{a, b, c1};
    SolveReport rep = solve_modular(inst, ctx);
    BigReal m5 = nth_root(250 * rep.X.re, 3);
    add_check(checks, "equation residual", rep.residual, ctx.tol(12));
    add_check(checks, "multiplier combination", fabs(m5 - (w / k1 + wp / kp1 - w * wp / (k1 * kp1))),
              ctx.tol(12));
    ordered_json j;
    j["id"] = 7;
    j["m5"] = to_decimal(m5, ctx.digits);
    j["X"] = to_decimal(rep.X.re, ctx.digits);
    j["checks"] = checks_json(checks, ctx.digits);
    return j;
}

ordered_json example_8(const PrecCtx& ctx) {
    std::vector<Check> checks;
    SexticInstance inst{BigReal(4), BigReal(125), BigReal(132)};
    SolveReport rep = solve_modular(inst, ctx);
    BigReal s5 = sqrt(BigReal(5));
    BigReal x_rad = BigReal(143375) / 16 + BigReal(64125) * s5 / 16 +
                    sqrt(BigReal(20553203125) / 32 + BigReal(9191671875) * s5 / 32) / 2;
    add_check(checks, "r = 4", fabs(rep.r - 4), ctx.tol(12));
    add_check(checks, "X radical", rel_diff(rep.X.re, x_rad), ctx.tol(15));
    add_check(checks, "root oracle", oracle_match(inst, rep, ctx), ctx.tol(12));
    // duplication route: R(e^{-2pi}) radical -> R(e^{-4pi}) -> X
    BigReal R2pi = -(1 + s5) / 2 + sqrt((5 + s5) / 2);
    BigReal R4pi = duplicate(R2pi, ctx);
    BigReal z = R4pi * R4pi * R4pi * R4pi * R4pi;
    BigReal X_dup = (1 / z - 11 - z) / 8;
    add_check(checks, "duplication route X", rel_diff(X_dup, rep.X.re), ctx.tol(12));
    ordered_json j;
    j["id"] = 8;
    j["r"] = to_decimal(rep.r, ctx.digits);
    j["X"] = to_decimal(rep.X.re, ctx.digits);
    j["checks"] = checks_json(checks, ctx.digits);
    return j;
}

ordered_json example_10(const PrecCtx& ctx) {
    std::vector<Check> checks;
    BigReal c1 = nth_root(BigReal(32), 3);
    SexticInstance inst{BigReal(1), BigReal(1), c1};
    SolveReport rep = solve_modular(inst, ctx);
    add_check(checks, "r = 2", fabs(rep.r - 2), ctx.tol(12));
    add_check(checks, "j(2) = 8000", rel_diff(j_eval(BigReal(2), JRoute::modulus, ctx).j, BigReal(8000)),
              ctx.tol(10));
    add_check(checks, "X = A_2/250", rel_diff(rep.X.re, a_value(BigReal(2), ctx).A / 250), ctx.tol(12));
    add_check(checks, "equation residual", rep.residual, ctx.tol(12));
    ordered_json j;
    j["id"] = 10;
    j["X"] = to_decimal(rep.X.re, ctx.digits);
    j["checks"] = checks_json(checks, ctx.digits);
    return j;
}

int run_examples(const Config& cfg, const std::string& id) {
    PrecCtx ctx(cfg.digits);
    ScopedPrec sp(ctx);
    ordered_json out = ordered_json::array();
    bool ok = true;
    auto run_one = [&](int which) {
        ordered_json j;
        switch (which) {
            case 1: j = example_1(ctx); break;
            case 3: j = example_3(ctx); break;
            case 4: j = example_4(ctx); break;
            case 5: j = example_5(ctx); break;
            case 6: j = example_6(ctx); break;
            case 7: j = example_7(ctx); break;
            case 8: j = example_8(ctx); break;
            case 10: j = example_10(ctx); break;
            default: throw domain_error("unknown example id " + std::to_string(which));
        }
        for (const auto& c : j["checks"])
            if (!c["pass"].get<bool>()) ok = false;
        out.push_back(std::move(j));
    };
    if (id == "all") {
        for (int which : {1, 3, 4, 5, 6, 7, 8, 10}) run_one(which);
    } else {
        run_one(std::stoi(id));
    }
    emit(cfg, out);
    return ok ? 0 : 4;
}

int run_table(const Config& cfg, const std::string& grid_s, const std::string& out_path, bool serial) {
    PrecCtx ctx(cfg.digits);
    ScopedPrec sp(ctx);
    ValueCache cache = cfg.cache_dir.empty() ? ValueCache() : ValueCache(cfg.cache_dir);

    std::vector<std::string> tokens;
    {
        std::stringstream ss(grid_s);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) tokens.push_back(tok);
    }
    if (tokens.empty()) throw domain_error("empty grid");

    struct Row {
        std::string r, k, j, R, A;
    };
    std::vector<Row> rows(tokens.size());
    int hits = 0, misses = 0;

    RunMode mode = serial ? RunMode::serial : RunMode::parallel;
    std::vector<int> row_miss(tokens.size(), 0);
    for_each_index(tokens.size(), mode, [&](std::size_t i) {
        const std::string& tok = tokens[i];
        BigReal r = parse_real(tok);
        Row row;
        row.r = tok;
        auto fetch = [&](const char* fn, auto compute) {
            if (auto v = cache.get(fn, tok, cfg.digits)) return *v;
            ++row_miss[i];
            std::string v = to_decimal(compute(), cfg.digits);
            cache.put(fn, tok, cfg.digits, v);
            return v;
        };
        row.k = fetch("k", [&] { return k_modulus(r, ctx); });
        row.j = fetch("j", [&] { return j_eval(r, JRoute::modulus, ctx).j; });
        row.R = fetch("R", [&] { return rrcf_eval(nome_from_r_doubled(r, ctx), RrcfMethod::continued_fraction, ctx).R; });
        row.A = fetch("A", [&] { return a_value(r, ctx).A; });
        rows[i] = std::move(row);
    });
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        misses += row_miss[i];
        hits += 4 - row_miss[i];
    }

    std::ostringstream csv;
    csv << "r,k,j,R,A\n";
    for (const auto& row : rows) csv << row.r << "," << row.k << "," << row.j << "," << row.R << "," << row.A << "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::trunc);
        if (!f) throw domain_error("cannot open output file " + out_path);
        f << csv.str();
        ordered_json meta;
        meta["rows"] = rows.size();
        meta["out"] = out_path;
        meta["cache_enabled"] = cache.enabled();
        meta["cache_hits"] = hits;
        meta["cache_misses"] = misses;
        emit(cfg, meta);
    } else {
        std::cout << csv.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arbitrary-precision sextic solver via modular functions"};
    app.require_subcommand(1);

    Config cfg;
    if (const char* env = std::getenv("SEXTIC_CACHE_DIR")) cfg.cache_dir = env;
    app.add_option("--digits", cfg.digits, "working decimal digits")->capture_default_str();
    app.add_option("--output", cfg.output, "output format: json|csv|text")->capture_default_str();
    app.add_option("--cache-dir", cfg.cache_dir, "value cache directory (env SEXTIC_CACHE_DIR)");

    auto* solve = app.add_subcommand("solve", "solve b^2/(20a) + bX + aX^2 = C1 X^{5/3}");
    std::string a_s, b_s, c1_s, method = "modular";
    solve->add_option("--a", a_s)->required();
    solve->add_option("--b", b_s)->required();
    solve->add_option("--c1", c1_s)->required();
    solve->add_option("--method", method, "modular|series")->capture_default_str();

    auto* eval = app.add_subcommand("eval", "evaluate a special function");
    std::string fn, at, r_s, route = "modulus";
    bool half_shift = false;
    eval->add_option("--fn", fn, "rrcf|eta|f|k|j|A|K|N")->required();
    eval->add_option("--at", at, "nome or argument (accepts e^-pi, e^-2pi, e^-pi*sqrt(R))");
    eval->add_option("--r", r_s, "r parameter");
    eval->add_option("--route", route, "j route: eta|rrcf|modulus|beta")->capture_default_str();
    eval->add_flag("--half", half_shift, "eta at tau = i sqrt(r)/2");

    auto* verify = app.add_subcommand("verify", "run a residual suite");
    std::string suite, grid_s;
    bool serial = false;
    verify->add_option("--suite", suite, "identities|conjectures")->required();
    verify->add_option("--grid", grid_s, "comma-separated r values")->required();
    verify->add_flag("--serial", serial, "disable the parallel grid runner");

    auto* examples = app.add_subcommand("examples", "reproduce the bundled worked examples");
    std::string ex_id;
    examples->add_option("--id", ex_id, "1|3|4|5|6|7|8|10|all")->required();

    auto* table = app.add_subcommand("table", "tabulate r,k,j,R,A over a grid");
    std::string table_r, table_out;
    bool table_serial = false;
    table->add_option("--r", table_r, "comma-separated r values")->required();
    table->add_option("--out", table_out, "CSV output path");
    table->add_flag("--serial", table_serial, "disable the parallel grid runner");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cfg.digits < 20) throw domain_error("--digits must be at least 20");
        if (*solve) return run_solve(cfg, a_s, b_s, c1_s, method);
        if (*eval) return run_eval(cfg, fn, at, r_s, route, half_shift);
        if (*verify) return run_verify(cfg, suite, grid_s, serial);
        if (*examples) return run_examples(cfg, ex_id);
        if (*table) return run_table(cfg, table_r, table_out, table_serial);
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const branch_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const verification_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
