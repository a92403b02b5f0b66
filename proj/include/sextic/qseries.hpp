#pragma once

#include <optional>

#include "sextic/kernel.hpp"

namespace sextic {

/// A nome q in (0,1), optionally tagged with the r it was built from
/// (q = e^{-pi sqrt r}, or e^{-2 pi sqrt r} when doubled).
struct Nome {
    BigReal q;
    std::optional<BigReal> r;
    bool doubled = false;
};

Nome nome_from_q(const BigReal& q);
Nome nome_from_r(const BigReal& r, const PrecCtx& ctx);           // e^{-pi sqrt r}
Nome nome_from_r_doubled(const BigReal& r, const PrecCtx& ctx);   // e^{-2 pi sqrt r}

/// f(-q) = prod_{n>=1} (1 - q^n), truncated once q^n drops below the
/// precision floor.
BigReal f_minus(const Nome& q, const PrecCtx& ctx);

/// Dedekind eta on the imaginary axis. half_shift selects tau = i sqrt(r)/2
/// instead of tau = i sqrt(r). Real-positive for these arguments; returned as
/// a complex value per the eta function's general type.
BigComplex eta(const BigReal& r, bool half_shift, const PrecCtx& ctx);

struct ThetaNulls {
    BigReal t2, t3, t4;
};

/// theta2 = 2 sum q^{(n+1/2)^2}, theta3 = 1 + 2 sum q^{n^2},
/// theta4 = 1 + 2 sum (-1)^n q^{n^2}.
ThetaNulls theta_nulls(const Nome& q, const PrecCtx& ctx);

/// Two-argument theta: 1 + 2 sum (-1)^n q^{n^2} cos(2 n z).
BigComplex theta4_z(const BigComplex& z, const Nome& q, const PrecCtx& ctx);

}  // namespace sextic
