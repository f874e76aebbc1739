#include "falc/bigreal.hpp"

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>

namespace falc {

Real::Real(long prec) {
    if (prec < MPFR_PREC_MIN) throw std::invalid_argument("Real: precision too small");
    mpfr_init2(x_, prec);
    mpfr_set_zero(x_, 1);
}

Real::Real(const Real& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(x_, o.x_);
    return *this;
}

Real::~Real() { mpfr_clear(x_); }

Real Real::of(long v, long prec) {
    Real r(prec);
    mpfr_set_si(r.x_, v, MPFR_RNDN);
    return r;
}

Real Real::of_double(double v, long prec) {
    Real r(prec);
    mpfr_set_d(r.x_, v, MPFR_RNDN);
    return r;
}

Real Real::of(const Rational& q, long prec) {
    Real r(prec);
    mpfr_set_q(r.x_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::parse(const std::string& s, long prec) {
    Real r(prec);
    if (mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("Real: cannot parse \"" + s + "\"");
    return r;
}

Real Real::pi(long prec) {
    Real r(prec);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
}

Real Real::operator-() const {
    Real r(precision());
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
}

static long join_prec(const Real& a, const Real& b) {
    return std::max(a.precision(), b.precision());
}

Real operator+(const Real& a, const Real& b) {
    Real r(join_prec(a, b));
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(join_prec(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(join_prec(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    if (b.is_zero()) throw std::domain_error("Real: division by zero");
    Real r(join_prec(a, b));
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real Real::abs() const {
    Real r(precision());
    mpfr_abs(r.x_, x_, MPFR_RNDN);
    return r;
}

std::string Real::str(long sig_digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", static_cast<int>(sig_digits), x_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

#define FALC_REAL_UNARY(name, fn)            \
    Real name(const Real& a) {               \
        Real r(a.precision());               \
        fn(r.get(), a.get(), MPFR_RNDN);     \
        return r;                            \
    }

FALC_REAL_UNARY(sin, mpfr_sin)
FALC_REAL_UNARY(cos, mpfr_cos)
FALC_REAL_UNARY(tan, mpfr_tan)
FALC_REAL_UNARY(exp, mpfr_exp)
FALC_REAL_UNARY(cosh, mpfr_cosh)

#undef FALC_REAL_UNARY

Real log(const Real& a) {
    if (a.sign() <= 0) throw std::domain_error("Real: log of a non-positive value");
    Real r(a.precision());
    mpfr_log(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& a) {
    if (a.sign() < 0) throw std::domain_error("Real: sqrt of a negative value");
    Real r(a.precision());
    mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Real round(const Real& a) {
    Real r(a.precision());
    mpfr_rint(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

std::string Complex::str(long sig_digits) const {
    std::string s = re.str(sig_digits);
    s += im.sign() < 0 ? " - " : " + ";
    s += im.abs().str(sig_digits) + "*i";
    return s;
}

Complex eval_numeric_galois(const CycloElement& x, long a, long prec) {
    const long N = x.modulus();
    long ar = a % N;
    if (ar < 0) ar += N;
    const Real two_pi = Real::of(2, prec) * Real::pi(prec);
    Complex acc(prec);
    mpfr_t angle, s, c;
    mpfr_init2(angle, prec);
    mpfr_init2(s, prec);
    mpfr_init2(c, prec);
    for (long i = 0; i < static_cast<long>(x.coords().size()); ++i) {
        const Rational& coef = x.coords()[i];
        if (coef.is_zero()) continue;
        mpfr_mul_si(angle, two_pi.get(), (i * ar) % N, MPFR_RNDN);
        mpfr_div_si(angle, angle, N, MPFR_RNDN);
        mpfr_sin_cos(s, c, angle, MPFR_RNDN);
        Real coef_r = Real::of(coef, prec);
        Real cr(prec), sr(prec);
        mpfr_set(cr.get(), c, MPFR_RNDN);
        mpfr_set(sr.get(), s, MPFR_RNDN);
        acc.re += coef_r * cr;
        acc.im += coef_r * sr;
    }
    mpfr_clear(angle);
    mpfr_clear(s);
    mpfr_clear(c);
    return acc;
}

Complex eval_numeric(const CycloElement& x, long prec) { return eval_numeric_galois(x, 1, prec); }

}  // namespace falc
