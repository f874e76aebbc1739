#pragma once

#include <mpfr.h>

#include <string>

#include "falc/cyclotomic.hpp"
#include "falc/rational.hpp"

namespace falc {

inline constexpr long kDefaultPrecision = 256;  // bits

/// Arbitrary-precision real number backed by MPFR.  Every value carries
/// its binary precision; arithmetic results use the larger precision of
/// the operands and round to nearest.
class Real {
public:
    explicit Real(long prec = kDefaultPrecision);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real of(long v, long prec = kDefaultPrecision);
    static Real of_double(double v, long prec = kDefaultPrecision);
    static Real of(const Rational& r, long prec = kDefaultPrecision);
    /// Base-10 literal, e.g. "0.862554627".
    static Real parse(const std::string& s, long prec = kDefaultPrecision);
    static Real pi(long prec = kDefaultPrecision);

    long precision() const { return mpfr_get_prec(x_); }
    mpfr_srcptr get() const { return x_; }
    mpfr_ptr get() { return x_; }

    Real operator-() const;
    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real& operator+=(const Real& o) { return *this = *this + o; }
    Real& operator-=(const Real& o) { return *this = *this - o; }
    Real& operator*=(const Real& o) { return *this = *this * o; }
    Real& operator/=(const Real& o) { return *this = *this / o; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) != 0; }

    int sign() const { return mpfr_sgn(x_); }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    Real abs() const;
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    /// Shortest-round-trip style decimal rendering with the given number
    /// of significant digits.
    std::string str(long sig_digits = 40) const;

private:
    mpfr_t x_;
};

Real sin(const Real& a);
Real cos(const Real& a);
Real tan(const Real& a);
Real log(const Real& a);
Real exp(const Real& a);
Real cosh(const Real& a);
Real sqrt(const Real& a);
/// Nearest integer (ties to even).
Real round(const Real& a);

/// Complex number over Real; only what the cusp-shape work needs.
struct Complex {
    Real re, im;

    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(long prec = kDefaultPrecision) : re(prec), im(prec) {}

    Real abs() const { return sqrt(re * re + im * im); }
    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b);

    std::string str(long sig_digits = 40) const;
};

/// Numeric value of an exact cyclotomic element under zeta_N -> e^(2 pi i / N).
Complex eval_numeric(const CycloElement& x, long prec = kDefaultPrecision);

/// Numeric value of sigma_a(x), evaluated directly as
/// sum_i c_i e^(2 pi i a i / N) without exact reduction.
Complex eval_numeric_galois(const CycloElement& x, long a, long prec = kDefaultPrecision);

}  // namespace falc
