#pragma once

#include <vector>

#include "sextic/kernel.hpp"

namespace sextic {

/// Evaluates sum coeffs[i] * z^i (Horner).
BigComplex poly_eval(const std::vector<BigComplex>& coeffs, const BigComplex& z);

/// All complex roots (with multiplicity) of the polynomial with ascending
/// coefficients coeffs[0] + coeffs[1] z + ... via Aberth-Ehrlich simultaneous
/// iteration. Deterministic: roots are seeded on a circle of radius
/// 1 + max|c_i/c_lead| with an irrational angular offset.
///
/// Postcondition: max |p(root)| < 10^-(digits-5) * max|c_i|; otherwise a
/// convergence_error carrying the achieved residual is thrown.
std::vector<BigComplex> poly_roots(const std::vector<BigComplex>& coeffs, const PrecCtx& ctx);

}  // namespace sextic
