#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace sextic {

// Arbitrary-precision real. Runtime-variable precision; the active working
// precision is governed by PrecCtx/ScopedPrec below.
using BigReal = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0, boost::multiprecision::allocate_dynamic>,
    boost::multiprecision::et_off>;

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct convergence_error : std::runtime_error {
    BigReal achieved;
    convergence_error(const std::string& msg, BigReal residual)
        : std::runtime_error(msg), achieved(std::move(residual)) {}
};

// A complex intermediate failed to collapse to the expected real value, or a
// required branch of a multivalued function does not exist.
struct branch_error : std::runtime_error {
    std::string where;
    branch_error(std::string at, const std::string& msg)
        : std::runtime_error(at + ": " + msg), where(std::move(at)) {}
};

struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Working precision: `digits` reported decimal digits plus `guard` extra
/// digits carried through every computation. Series truncate only when a
/// term drops below 10^-(digits+guard).
struct PrecCtx {
    int digits;
    int guard;

    explicit PrecCtx(int d, int g = 10) : digits(d), guard(g) {
        if (d < 20) throw domain_error("PrecCtx: digits must be >= 20");
        if (g < 1) throw domain_error("PrecCtx: guard must be >= 1");
    }
    int working() const { return digits + guard; }
    PrecCtx with_digits(int d) const { return PrecCtx(d, guard); }

    BigReal eps() const;            // 10^-(digits+guard), the truncation floor
    BigReal tol(int slack) const;   // 10^-(digits-slack)
};

// Raises the process-wide default precision to at least ctx.working() (plus a
// small cushion) for the lifetime of the object. The raise is skipped when
// the ambient precision already suffices, which keeps concurrent grid workers
// from writing the shared default: schedulers pre-set the precision once
// before fanning out (see gridrun.hpp).
class ScopedPrec {
  public:
    explicit ScopedPrec(const PrecCtx& ctx);
    ~ScopedPrec();
    ScopedPrec(const ScopedPrec&) = delete;
    ScopedPrec& operator=(const ScopedPrec&) = delete;
    static unsigned decimal_for(const PrecCtx& ctx) {
        return static_cast<unsigned>(ctx.working() + 5);
    }

  private:
    unsigned saved_ = 0;
    bool raised_ = false;
};

/// Re-seats a value at the context's working precision. The backend's unary
/// functions keep their operand's precision, so arguments built under a lower
/// ambient precision must be promoted on entry to every operation.
BigReal at_working(const BigReal& x, const PrecCtx& ctx);

BigReal const_pi();                       // pi at the current default precision
BigReal pow10(long e);                    // exact 10^e
BigReal digamma(const BigReal& x);
BigReal nth_root(const BigReal& x, int n);  // real root, x >= 0 (odd n allows x < 0)

/// |a-b| / max(|a|, |b|, floor); the floor keeps comparisons near zero sane.
BigReal rel_diff(const BigReal& a, const BigReal& b);

std::string to_decimal(const BigReal& x, int digits);
BigReal parse_real(const std::string& s);  // decimal or rational "p/q"

/// Arithmetic-geometric mean. Stops when |a_n - b_n| < eps * a_n.
BigReal agm(const BigReal& x, const BigReal& y, const PrecCtx& ctx);

// -------------------------------------------------------------------------
// Complex value at working precision. Principal branches throughout: arg in
// (-pi, pi], pow(z, p) = exp(p log z).
struct BigComplex {
    BigReal re, im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigReal r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

    BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
    BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
};

inline BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
inline BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
inline BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
inline BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
inline BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }

BigReal abs(const BigComplex& z);
BigReal norm(const BigComplex& z);   // |z|^2
BigReal arg(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);
BigComplex cos(const BigComplex& z);
BigComplex pow(const BigComplex& z, const BigReal& p);
BigComplex pow(const BigComplex& z, int p);

}  // namespace sextic
