#pragma once

#include <vector>

#include "falc/polynomial.hpp"
#include "falc/rational.hpp"
#include "falc/unit_subgroup.hpp"

namespace falc {

/// The N-th cyclotomic polynomial, monic of degree phi(N), integer
/// coefficients.  Computed by exact division of x^N - 1 by the product of
/// the cyclotomic polynomials of the proper divisors of N; results are
/// memoized process-wide.
Polynomial cyclotomic_polynomial(long N);

/// An element of Q(zeta_N), stored as its coordinate vector of length
/// phi(N) in the power basis {1, zeta, ..., zeta^(phi(N)-1)}, i.e. the
/// canonical representative modulo the N-th cyclotomic polynomial.
/// Representation is canonical: two elements are equal iff their modulus
/// and coordinates are equal.  Values are immutable; all operations are
/// pure and thread-safe.
class CycloElement {
public:
    static CycloElement zero(long N);
    static CycloElement one(long N);
    static CycloElement from_rational(long N, const Rational& r);
    /// zeta_N^k, any integer k (reduced mod N).
    static CycloElement root_of_unity(long N, long k);
    /// Coordinates must have length phi(N).
    static CycloElement from_coords(long N, std::vector<Rational> coords);

    long modulus() const { return modulus_; }
    const std::vector<Rational>& coords() const { return v_; }

    bool is_zero() const;
    /// True when only the constant coordinate may be nonzero.
    bool is_rational() const;
    Rational as_rational() const;

    CycloElement operator-() const;
    friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    CycloElement scaled(const Rational& s) const;

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the cyclotomic polynomial; throws std::domain_error on zero.
    CycloElement inverse() const;

    friend bool operator==(const CycloElement& a, const CycloElement& b) {
        return a.modulus_ == b.modulus_ && a.v_ == b.v_;
    }
    friend bool operator!=(const CycloElement& a, const CycloElement& b) { return !(a == b); }

private:
    CycloElement(long modulus, std::vector<Rational> v) : modulus_(modulus), v_(std::move(v)) {}
    long modulus_;
    std::vector<Rational> v_;
};

/// Galois action sigma_a: zeta -> zeta^a; requires gcd(a, N) = 1.
CycloElement galois_apply(long a, const CycloElement& x);

/// Monic minimal polynomial of x over Q, of degree [Q(x):Q].  Found as the
/// first linear dependence among the powers 1, x, x^2, ... by exact
/// integer-scaled Gaussian elimination on the coordinate vectors.
Polynomial minimal_polynomial(const CycloElement& x);

/// { a in (Z/N)* : sigma_a(x) = x }.  Its index in (Z/N)* equals the degree
/// of the minimal polynomial of x.
UnitSubgroup stabilizer(const CycloElement& x);

/// Image of x under Q(zeta_N) -> Q(zeta_L), zeta_N -> zeta_L^(L/N);
/// L must be a multiple of the modulus of x.
CycloElement embed_at_level(const CycloElement& x, long L);

}  // namespace falc
