#pragma once

#include "sextic/qseries.hpp"

namespace sextic {

enum class RrcfMethod { continued_fraction, theta_quotient, product_series };

struct RrcfValue {
    Nome q;
    BigReal R;
    RrcfMethod method;
};

/// Rogers-Ramanujan continued fraction R(q) by the requested route:
///  - continued_fraction: backward recurrence, depth chosen so the tail is
///    below the precision floor;
///  - theta_quotient: e^{-x/5} theta4(3ix/4, e^{-5x/2}) / theta4(ix/4, e^{-5x/2})
///    with x = -log q;
///  - product_series: inverts 1/R^5 - 11 - R^5 = f(-q)^6/(q f(-q^5)^6).
RrcfValue rrcf_eval(const Nome& q, RrcfMethod method, const PrecCtx& ctx);

struct AValue {
    BigReal r, A;
};

/// A_r = f(-q^2)^6/(q^2 f(-q^10)^6) = R(q^2)^{-5} - 11 - R(q^2)^5 at
/// q = e^{-pi sqrt r}. Both routes are evaluated and must agree.
AValue a_value(const BigReal& r, const PrecCtx& ctx);

/// v = R(q^2) from u = R(q): the unique root in (0,1) of
/// u v^3 + u^3 v^2 - v + u^2 = 0.
BigReal duplicate(const BigReal& u, const PrecCtx& ctx);

/// R(e^{-pi sqrt r / 5}) from v = R(e^{-pi sqrt r}):
/// the real positive fifth root of v (1-2v+4v^2-3v^3+v^4)/(1+3v+4v^2+2v^3+v^4).
BigReal descend_r25(const BigReal& v, const PrecCtx& ctx);

/// N(q) = (1/5) (R(q)^{-5} - 11 - R(q)^5)^{1/6}.
BigReal n_value(const Nome& q, const PrecCtx& ctx);

/// Residual of the derivative identity
/// 5R'(q) / (R (R^{-5}-11-R^5)^{1/6}) = f(-q)^4 q^{-5/6},
/// with R' from central differences at step 10^{-digits/2}. The finite
/// difference limits accuracy to roughly half the working digits.
BigReal n_derivative_residual(const Nome& q, const PrecCtx& ctx);

}  // namespace sextic
