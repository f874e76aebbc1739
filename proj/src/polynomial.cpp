#include "falc/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace falc {

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& r) {
    Polynomial p;
    if (!r.is_zero()) p.c_.push_back(r);
    return p;
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
    Polynomial p;
    if (c.is_zero()) return p;
    p.c_.assign(k + 1, Rational(0));
    p.c_[k] = c;
    return p;
}

Polynomial Polynomial::x_pow_minus_one(std::size_t n) {
    Polynomial p;
    p.c_.assign(n + 1, Rational(0));
    p.c_[0] = Rational(-1);
    p.c_[n] = Rational(1);
    return p;
}

const Rational& Polynomial::coeff(std::size_t k) const {
    static const Rational kZero(0);
    return k < c_.size() ? c_[k] : kZero;
}

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
    return c_.back();
}

bool Polynomial::has_integer_coeffs() const {
    for (const auto& r : c_)
        if (!r.is_integer()) return false;
    return true;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& r : p.c_) r = -r;
    return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rational& s) const {
    if (s.is_zero()) return Polynomial();
    Polynomial p(*this);
    for (auto& r : p.c_) r *= s;
    return p;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::domain_error("Polynomial: cannot normalize the zero polynomial");
    return scaled(Rational(1) / leading());
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("Polynomial: division by the zero polynomial");
    Polynomial r = num;
    if (num.degree() < den.degree()) return {Polynomial(), r};
    std::vector<Rational> q(num.degree() - den.degree() + 1, Rational(0));
    const Rational lead_inv = Rational(1) / den.leading();
    while (!r.is_zero() && r.degree() >= den.degree()) {
        const std::size_t shift = r.degree() - den.degree();
        const Rational f = r.leading() * lead_inv;
        q[shift] = f;
        // r -= f * x^shift * den, done in place
        for (std::size_t i = 0; i < den.c_.size(); ++i) r.c_[i + shift] -= f * den.c_[i];
        r.trim();
    }
    return {Polynomial(std::move(q)), r};
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Rational& r = c_[k];
        if (r.is_zero()) continue;
        const bool neg = r.sign() < 0;
        Rational mag = neg ? -r : r;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool unit = (mag == Rational(1));
        if (k == 0) {
            os << mag.str();
        } else {
            if (!unit) os << mag.str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace falc
