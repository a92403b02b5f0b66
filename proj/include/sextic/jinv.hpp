#pragma once

#include "sextic/kernel.hpp"

namespace sextic {

enum class JRoute { eta_quotient, rrcf, modulus, beta };

struct JValue {
    BigReal r, j;
    JRoute route;
};

/// Klein j-invariant at tau = i sqrt(r) by one of four independent routes:
///  - eta_quotient: [(eta(i sqrt r/2)/eta(i sqrt r))^16 + 16 (..)^-8]^3
///  - rrcf:         degree-5 polynomial in R(e^{-2 pi sqrt r})^5
///  - modulus:      256 (k^2 + k'^4)^3 / (k k')^4
///  - beta:         432/(beta (1-beta)) with beta from the 2F1(1/6,5/6;1;.)
///                  period ratio
JValue j_eval(const BigReal& r, JRoute route, const PrecCtx& ctx);

/// U(x) = 256 (x^2 + (1-x^2)^2)^3 / (x^4 (1-x^2)^2).
BigReal u_forward(const BigReal& x, const PrecCtx& ctx);

struct UInverseResult {
    BigReal x;      // branch in (0, 1/sqrt2], i.e. r >= 1
    BigReal x_alt;  // complementary modulus sqrt(1-x^2); same U value
    BigReal u;      // the cubic root u = x^2(1-x^2) in (0, 1/4]
};

/// Inverse of U on t >= 1728: substitutes u = x^2(1-x^2), solves the cubic
/// 256(1-u)^3 = t u^2 for its unique root in (0, 1/4], and returns
/// x = sqrt((1-sqrt(1-4u))/2) together with the complementary branch.
UInverseResult u_inverse(const BigReal& t, const PrecCtx& ctx);

}  // namespace sextic
