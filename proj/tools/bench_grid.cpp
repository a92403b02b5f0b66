// Wall-time comparison of the serial and OpenMP grid runners on the
// identity suite and on a raw value table.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <vector>

#include "sextic/elliptic.hpp"
#include "sextic/jinv.hpp"
#include "sextic/rrcf.hpp"
#include "sextic/verify.hpp"

using namespace sextic;

namespace {

double wall() { return omp_get_wtime(); }

std::vector<BigReal> make_grid(int n) {
    std::vector<BigReal> grid;
    for (int i = 0; i < n; ++i) grid.push_back(BigReal(1) + BigReal(i) / 4);
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    int digits = argc > 1 ? std::atoi(argv[1]) : 60;
    int n = argc > 2 ? std::atoi(argv[2]) : 12;
    PrecCtx ctx(digits);
    ScopedPrec sp(ctx);
    auto grid = make_grid(n);

    std::printf("grid points: %d, digits: %d, omp max threads: %d\n", n, digits,
                omp_get_max_threads());

    // raw value table: k, j, R, A per grid point
    auto table = [&](RunMode mode) {
        std::vector<BigReal> sink(grid.size());
        for_each_index(grid.size(), mode, [&](std::size_t i) {
            BigReal acc = k_modulus(grid[i], ctx);
            acc += j_eval(grid[i], JRoute::modulus, ctx).j;
            acc += rrcf_eval(nome_from_r_doubled(grid[i], ctx), RrcfMethod::continued_fraction, ctx).R;
            acc += a_value(grid[i], ctx).A;
            sink[i] = acc;
        });
        return sink;
    };

    double t0 = wall();
    auto serial_vals = table(RunMode::serial);
    double t1 = wall();
    auto par_vals = table(RunMode::parallel);
    double t2 = wall();
    bool identical = true;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (serial_vals[i] != par_vals[i]) identical = false;
    std::printf("value table   serial %.3fs | parallel %.3fs | speedup %.2fx | identical: %s\n",
                t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1), identical ? "yes" : "NO");

    double t3 = wall();
    auto rep_s = identity_suite(grid, ctx, RunMode::serial);
    double t4 = wall();
    auto rep_p = identity_suite(grid, ctx, RunMode::parallel);
    double t5 = wall();
    bool same = rep_s.entries.size() == rep_p.entries.size();
    for (std::size_t i = 0; same && i < rep_s.entries.size(); ++i)
        same = rep_s.entries[i].residual == rep_p.entries[i].residual;
    std::printf("identity suite serial %.3fs | parallel %.3fs | speedup %.2fx | identical: %s\n",
                t4 - t3, t5 - t4, (t4 - t3) / (t5 - t4), same ? "yes" : "NO");
    std::printf("suite pass: %s\n", rep_p.all_passed() ? "yes" : "NO");
    return 0;
}
