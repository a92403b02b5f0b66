#include "sextic/kernel.hpp"

#include <boost/math/special_functions/fpclassify.hpp>

#include <algorithm>
#include <sstream>

namespace sextic {

using boost::multiprecision::fabs;
using boost::multiprecision::sqrt;

BigReal PrecCtx::eps() const { return pow10(-(digits + guard)); }
BigReal PrecCtx::tol(int slack) const { return pow10(-(digits - slack)); }

ScopedPrec::ScopedPrec(const PrecCtx& ctx) {
    const unsigned want = decimal_for(ctx);
    const unsigned cur = BigReal::default_precision();
    if (cur < want) {
        saved_ = cur;
        raised_ = true;
        BigReal::default_precision(want);
    }
}

ScopedPrec::~ScopedPrec() {
    if (raised_) BigReal::default_precision(saved_);
}

BigReal at_working(const BigReal& x, const PrecCtx& ctx) {
    return BigReal(x, ScopedPrec::decimal_for(ctx));
}

BigReal const_pi() {
    BigReal p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

BigReal pow10(long e) {
    BigReal r;
    mpfr_ui_pow_ui(r.backend().data(), 10u, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) r = 1 / r;
    return r;
}

BigReal digamma(const BigReal& x) {
    BigReal r;
    mpfr_digamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

BigReal nth_root(const BigReal& x, int n) {
    if (n <= 0) throw domain_error("nth_root: n must be positive");
    if (x < 0 && n % 2 == 0) throw domain_error("nth_root: negative radicand with even index");
    BigReal r;
    mpfr_rootn_ui(r.backend().data(), x.backend().data(), static_cast<unsigned long>(n), MPFR_RNDN);
    return r;
}

BigReal rel_diff(const BigReal& a, const BigReal& b) {
    BigReal scale = std::max(fabs(a), fabs(b));
    if (scale < 1) scale = 1;
    return fabs(a - b) / scale;
}

std::string to_decimal(const BigReal& x, int digits) {
    return x.str(digits);
}

BigReal parse_real(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigReal num(s.substr(0, slash));
            BigReal den(s.substr(slash + 1));
            if (den == 0) throw domain_error("parse_real: zero denominator");
            return num / den;
        }
        return BigReal(s);
    } catch (const std::runtime_error&) {
        throw domain_error("parse_real: cannot parse '" + s + "'");
    }
}

BigReal agm(const BigReal& x, const BigReal& y, const PrecCtx& ctx) {
    ScopedPrec sp(ctx);
    if (!boost::math::isfinite(x) || !boost::math::isfinite(y))
        throw domain_error("agm: non-finite input");
    if (x <= 0 || y < 0) throw domain_error("agm: requires x > 0, y >= 0");
    if (y == 0) return BigReal(0);
    BigReal a = at_working(x, ctx), b = at_working(y, ctx);
    if (a < b) std::swap(a, b);
    const BigReal eps = ctx.eps();
    for (int it = 0; it < 10000; ++it) {
        if (a - b < eps * a) break;
        BigReal an = (a + b) / 2;
        b = sqrt(a * b);
        a = an;
    }
    return (a + b) / 2;
}

// ---- BigComplex -----------------------------------------------------------

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    BigReal r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    BigReal d = o.re * o.re + o.im * o.im;
    if (d == 0) throw domain_error("BigComplex: division by zero");
    BigReal r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = r;
    return *this;
}

BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigReal abs(const BigComplex& z) {
    BigReal r;
    mpfr_hypot(r.backend().data(), z.re.backend().data(), z.im.backend().data(), MPFR_RNDN);
    return r;
}

BigReal arg(const BigComplex& z) {
    BigReal r;
    mpfr_atan2(r.backend().data(), z.im.backend().data(), z.re.backend().data(), MPFR_RNDN);
    return r;
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigComplex sqrt(const BigComplex& z) {
    using boost::multiprecision::sqrt;
    if (z.im == 0) {
        if (z.re >= 0) return {sqrt(z.re), BigReal(0)};
        return {BigReal(0), sqrt(-z.re)};
    }
    BigReal m = sextic::abs(z);
    BigReal t = sqrt((m + fabs(z.re)) / 2);
    if (z.re >= 0) return {t, z.im / (2 * t)};
    BigReal s = fabs(z.im) / (2 * t);
    return {s, z.im >= 0 ? t : -t};
}

BigComplex exp(const BigComplex& z) {
    using boost::multiprecision::cos;
    using boost::multiprecision::exp;
    using boost::multiprecision::sin;
    BigReal m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

BigComplex log(const BigComplex& z) {
    using boost::multiprecision::log;
    if (z.re == 0 && z.im == 0) throw domain_error("BigComplex: log of zero");
    return {log(sextic::abs(z)), arg(z)};
}

BigComplex cos(const BigComplex& z) {
    using boost::multiprecision::cos;
    using boost::multiprecision::cosh;
    using boost::multiprecision::sin;
    using boost::multiprecision::sinh;
    return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

BigComplex pow(const BigComplex& z, const BigReal& p) {
    if (z.re == 0 && z.im == 0) {
        if (p <= 0) throw domain_error("BigComplex: pow of zero with non-positive exponent");
        return {BigReal(0), BigReal(0)};
    }
    return exp(BigComplex(p) * log(z));
}

BigComplex pow(const BigComplex& z, int p) {
    if (p == 0) return {BigReal(1), BigReal(0)};
    bool inv = p < 0;
    unsigned e = static_cast<unsigned>(inv ? -p : p);
    BigComplex base = z, acc{BigReal(1), BigReal(0)};
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    if (inv) return BigComplex(BigReal(1)) / acc;
    return acc;
}

}  // namespace sextic
