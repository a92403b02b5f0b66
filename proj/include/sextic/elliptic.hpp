#pragma once

#include "sextic/qseries.hpp"

namespace sextic {

/// Complete elliptic integral of the first kind, K(x) = pi/(2 agm(1, x')).
BigReal ellipK(const BigReal& x, const PrecCtx& ctx);

/// Singular modulus k_r = theta2(q)^2 / theta3(q)^2 at q = e^{-pi sqrt r}.
BigReal k_modulus(const BigReal& r, const PrecCtx& ctx);

/// Inverse of the singular-modulus map: r = K(x')^2 / K(x)^2.
BigReal k_inverse(const BigReal& x, const PrecCtx& ctx);

/// A degree-25 modulus pair (k_r, k_{25r}) with the mixed moduli
/// w = sqrt(k_r k_{25r}) and w' = sqrt(k'_r k'_{25r}).
struct ModulusPair {
    BigReal k_r, k25_r, w, w_prime;
};

ModulusPair pair_from_moduli(const BigReal& k_r, const BigReal& k25_r);

/// Builds the pair from the rational parameter L > 0:
///   w^2 = L(18+L)/(6(64+3L)),  M = (18+L)/(64+3L),
///   S = sqrt(4 + (2/3)T^2)/2 + sqrt(2/3) T/2 with T = (L/M)^{1/6} - 4(M/L)^{1/6},
///   k_r = w/S^2, k_{25r} = w S^2.
ModulusPair pair_from_L(const BigReal& L, const PrecCtx& ctx);

/// |k k25 + k' k25' + 2*4^{1/3} (k k25 k' k25')^{1/3} - 1| for the pair.
BigReal modular5_residual(const ModulusPair& pair, const PrecCtx& ctx);

// --- fifth-degree chain maps ----------------------------------------------
// With G_s = k_s k'_s and A_s the Rogers-Ramanujan quantity at level s, the
// three maps below tie consecutive levels together:
//   map_u1((G_s/G_{25s})^{1/12})^6 = A_s          (radical lift)
//   map_v = inverse of map_u1                      (radical drop)
//   map_q(A_s) = A_{s/25}                          (level descent)

BigReal map_u1(const BigReal& y, const PrecCtx& ctx);

/// Inverse of map_u1. Goes through a complex cube root; the imaginary part of
/// the radicand must collapse below the precision floor or a branch_error is
/// raised naming the offending sub-expression.
BigReal map_v(const BigReal& x, const PrecCtx& ctx);

BigReal map_q(const BigReal& a, const PrecCtx& ctx);

/// Solves map_q(x) = a for x (the level ascent); strictly monotone, solved by
/// a log-space secant iteration seeded from the asymptote map_q(x) ~ x^{1/5}.
BigReal map_q_inverse(const BigReal& a, const PrecCtx& ctx);

/// k_{25^n r0} from a consistent modulus pair at (r0/25, r0), iterating the
/// chain maps n times.
BigReal p_iterate(const BigReal& r0, const BigReal& k_r0, const BigReal& k_r0_over_25, int n,
                  const PrecCtx& ctx);

/// 2F1(1/6, 5/6; 1; x) on (0,1); direct series for x <= 1/2 and the
/// logarithmic connection formula at 1-x otherwise.
BigReal hyp2f1_sixth(const BigReal& x, const PrecCtx& ctx);

/// Fifth-base modulus from k_r: solves 432/(beta(1-beta)) = U(k_r) on the
/// beta <= 1/2 branch.
BigReal beta_of_k(const BigReal& k, const PrecCtx& ctx);

/// r = (u(1-x)/u(x))^2 with u = 2F1(1/6,5/6;1;.).
BigReal beta_inverse(const BigReal& x, const PrecCtx& ctx);

/// w from the sixth-root parameter A = (L/M)^{1/6}:
/// w^2 = [4096 - 20A^6 + A^12 + (A^6-64) sqrt(4096 + 88A^6 + A^12)] / (108 A^6).
BigReal w_from_A(const BigReal& A, const PrecCtx& ctx);

}  // namespace sextic
