#include "sextic/poly.hpp"

#include <algorithm>

namespace sextic {

using boost::multiprecision::cos;
using boost::multiprecision::fabs;
using boost::multiprecision::sin;
using boost::multiprecision::sqrt;

BigComplex poly_eval(const std::vector<BigComplex>& coeffs, const BigComplex& z) {
    BigComplex acc{BigReal(0), BigReal(0)};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

namespace {

BigComplex poly_deriv_eval(const std::vector<BigComplex>& coeffs, const BigComplex& z) {
    BigComplex acc{BigReal(0), BigReal(0)};
    for (std::size_t i = coeffs.size() - 1; i >= 1; --i) {
        acc = acc * z + BigComplex(BigReal(static_cast<long>(i))) * coeffs[i];
    }
    return acc;
}

}  // namespace

std::vector<BigComplex> poly_roots(const std::vector<BigComplex>& coeffs_in, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (coeffs_in.size() < 2) throw domain_error("poly_roots: degree must be >= 1");
    if (abs(coeffs_in.back()) == 0) throw domain_error("poly_roots: zero leading coefficient");

    // Factor out roots at the origin so the Aberth iteration sees a nonzero
    // constant term. Coefficients are re-seated at working precision.
    std::vector<BigComplex> coeffs;
    coeffs.reserve(coeffs_in.size());
    for (const auto& c : coeffs_in) coeffs.push_back({at_working(c.re, ctx), at_working(c.im, ctx)});
    std::vector<BigComplex> roots;
    while (coeffs.size() > 1 && abs(coeffs.front()) == 0) {
        roots.emplace_back(BigReal(0), BigReal(0));
        coeffs.erase(coeffs.begin());
    }
    const std::size_t n = coeffs.size() - 1;
    if (n == 0) return roots;

    BigReal coeff_scale = 0;
    for (const auto& c : coeffs_in) coeff_scale = std::max(coeff_scale, abs(c));

    if (n == 1) {
        roots.push_back(-coeffs[0] / coeffs[1]);
        return roots;
    }

    BigReal radius = 0;
    for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, abs(coeffs[i] / coeffs[n]));
    radius += 1;

    // Golden-section angular offset breaks symmetry deterministically.
    const BigReal two_pi = 2 * const_pi();
    const BigReal offset = (sqrt(BigReal(5)) - 1) / 2;
    std::vector<BigComplex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        BigReal ang = two_pi * (BigReal(static_cast<long>(k)) + offset) / BigReal(static_cast<long>(n));
        z[k] = {radius * cos(ang), radius * sin(ang)};
    }

    const BigReal step_tol = ctx.eps();
    const BigReal resid_target = ctx.tol(5) * coeff_scale;
    const int max_iter = 200;

    std::vector<bool> done(n, false);
    for (int it = 0; it < max_iter; ++it) {
        BigReal max_step = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k]) continue;
            BigComplex p = poly_eval(coeffs, z[k]);
            if (abs(p) < resid_target / 16) {
                done[k] = true;
                continue;
            }
            BigComplex dp = poly_deriv_eval(coeffs, z[k]);
            if (abs(dp) == 0) {
                // nudge off the stationary point; keeps the run deterministic
                z[k] += BigComplex(step_tol + BigReal(1) / 1024, BigReal(0));
                continue;
            }
            BigComplex newton = p / dp;
            BigComplex s{BigReal(0), BigReal(0)};
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                s += BigComplex(BigReal(1)) / (z[k] - z[j]);
            }
            BigComplex denom = BigComplex(BigReal(1)) - newton * s;
            BigComplex w = abs(denom) == 0 ? newton : newton / denom;
            z[k] -= w;
            max_step = std::max(max_step, abs(w) / std::max(BigReal(1), abs(z[k])));
        }
        bool all_done = std::all_of(done.begin(), done.end(), [](bool b) { return b; });
        if (all_done || max_step < step_tol) break;
    }

    BigReal max_resid = 0;
    for (std::size_t k = 0; k < n; ++k) max_resid = std::max(max_resid, abs(poly_eval(coeffs, z[k])));
    if (max_resid >= resid_target)
        throw convergence_error("poly_roots: iteration budget exhausted", max_resid / coeff_scale);

    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

}  // namespace sextic
