#pragma once

#include <string>
#include <vector>

#include "falc/rational.hpp"

namespace falc {

/// Univariate polynomial over the rationals, coefficients stored lowest
/// degree first.  The zero polynomial is the empty coefficient vector;
/// otherwise the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return constant(Rational(1)); }
    static Polynomial constant(const Rational& r);
    /// c * x^k
    static Polynomial monomial(const Rational& c, std::size_t k);
    /// x^n - 1
    static Polynomial x_pow_minus_one(std::size_t n);

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& coeff(std::size_t k) const;
    const Rational& leading() const;

    bool is_monic() const { return !c_.empty() && leading() == Rational(1); }
    bool has_integer_coeffs() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& s) const;
    Polynomial monic() const;

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

    Rational eval(const Rational& x) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return a.c_ != b.c_; }

    /// Human form, e.g. "x^2 + 2" or "x^3 - 1/2*x + 3".
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace falc
