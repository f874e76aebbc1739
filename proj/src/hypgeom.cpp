#include "falc/hypgeom.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "falc/tracefield.hpp"

namespace falc {

namespace {

void require_chain(long n) {
    if (n < 3) throw std::invalid_argument("pretzel FAL requires n >= 3 crossing circles");
}

// zeta(2m) values at a given working precision, grown on demand.
const Real& zeta_even(long m, long wp) {
    static std::mutex mu;
    static std::map<long, std::vector<Real>> cache;  // wp -> [zeta(2), zeta(4), ...]
    std::scoped_lock lock(mu);
    auto& v = cache[wp];
    while (static_cast<long>(v.size()) < m) {
        Real z(wp);
        mpfr_zeta_ui(z.get(), 2 * (v.size() + 1), MPFR_RNDN);
        v.push_back(std::move(z));
    }
    return v[m - 1];
}

}  // namespace

Real lobachevsky(const Real& theta, long prec) {
    if (prec < 32) throw std::invalid_argument("lobachevsky: precision below 32 bits");
    const long wp = prec + 64;
    const Real pi = Real::pi(wp);

    // reduce mod pi into [-pi/2, pi/2]; the function is odd and pi-periodic
    Real t(wp);
    mpfr_set(t.get(), theta.get(), MPFR_RNDN);
    t = t - pi * round(t / pi);
    if (t.is_zero()) return Real(prec);

    const int sign = t.sign();
    const Real u = t.abs();

    const Real q2 = (u / pi) * (u / pi);  // <= 1/4 after reduction
    Real sum = u - u * log(Real::of(2, wp) * u);
    Real p = u;  // u * q2^m
    Real stop(wp);
    mpfr_set_ui_2exp(stop.get(), 1, -(wp + 2), MPFR_RNDN);
    for (long m = 1;; ++m) {
        p = p * q2;
        Real term = zeta_even(m, wp) * p / Real::of(m * (2 * m + 1), wp);
        sum = sum + term;
        if (term < stop) break;  // tail < term * q2/(1-q2) < term/3
    }

    Real out(prec);
    mpfr_set(out.get(), sum.get(), MPFR_RNDN);
    if (sign < 0) out = -out;
    return out;
}

Real volume(long n, long prec) {
    require_chain(n);
    return Real::of(8 * n, prec) * orbifold_volume_f(n, prec);
}

Real orbifold_volume_f(long n, long prec) {
    require_chain(n);
    const long wp = prec + 16;
    const Real pi = Real::pi(wp);
    const Real a = pi / Real::of(4, wp) + pi / Real::of(2 * n, wp);
    const Real b = pi / Real::of(4, wp) - pi / Real::of(2 * n, wp);
    Real f = lobachevsky(a, wp) + lobachevsky(b, wp);
    Real out(prec);
    mpfr_set(out.get(), f.get(), MPFR_RNDN);
    return out;
}

Real orbifold_volume_f_derivative(long n, long prec) {
    require_chain(n);
    const Real pi = Real::pi(prec);
    const Real a = pi / Real::of(4, prec) + pi / Real::of(2 * n, prec);
    const Real b = pi / Real::of(4, prec) - pi / Real::of(2 * n, prec);
    return pi / Real::of(2 * n * n, prec) * log(sin(a) / sin(b));
}

Real figure_eight_volume(long prec) {
    return Real::of(6, prec) * lobachevsky(Real::pi(prec) / Real::of(3, prec), prec);
}

Real ideal_octahedron_volume(long prec) {
    return Real::of(8, prec) * lobachevsky(Real::pi(prec) / Real::of(4, prec), prec);
}

PackingData packing_radii(long n, long prec) {
    require_chain(n);
    const Real theta = Real::pi(prec) / Real::of(n, prec);
    const Real csc = Real::of(1, prec) / sin(theta);
    const Real one = Real::of(1, prec);
    PackingData pd{n, csc + one, csc - one, n, tan(theta) * (csc - one), tan(theta) * (csc + one)};
    // Lemma-level consistency: 1/(2r) + 1/(2R) = sec(theta)
    const Real two = Real::of(2, prec);
    const Real lhs = one / (two * pd.shaded_small) + one / (two * pd.shaded_large);
    const Real sec = one / cos(theta);
    Real tol(prec);
    mpfr_set_ui_2exp(tol.get(), 1, -(prec - 8), MPFR_RNDN);
    if ((lhs - sec).abs() > tol) throw std::logic_error("packing_radii: radii identity failed");
    return pd;
}

Complex tile_shape(long n, long prec) {
    require_chain(n);
    const Real theta = Real::pi(prec) / Real::of(n, prec);
    return {Real(prec), Real::of(1, prec) / cos(theta)};
}

CuspShapeValue cusp_shape(long n, CuspKind kind, long prec) {
    require_chain(n);
    const Real theta = Real::pi(prec) / Real::of(n, prec);
    const Real c = cos(theta);
    CuspShapeValue v{kind, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    switch (kind) {
        case CuspKind::untwisted:
            v.exact = trace_field_generator(n);
            v.numeric = Complex{Real(prec), Real::of(2, prec) * c};
            break;
        case CuspKind::twisted_positive:
        case CuspKind::twisted_negative: {
            const int sign = kind == CuspKind::twisted_positive ? 1 : -1;
            v.exact = twisted_cusp_shape_exact(n, sign);
            Complex num{Real(prec), Real::of(2, prec) * c};
            Complex den{Real::of(1, prec), Real::of(sign, prec) * c};
            v.numeric = num / den;
            break;
        }
        case CuspKind::knot_circle_bounds:
            v.meridian_length = Real::of(2, prec);
            v.longitude_lower_bound = Real::of(2 * n, prec);
            break;
    }
    return v;
}

GeodesicData geodesic_data(long n, long prec) {
    require_chain(n);
    const Real theta = Real::pi(prec) / Real::of(n, prec);
    const Real csc = Real::of(1, prec) / sin(theta);
    const Real one = Real::of(1, prec);
    Real perp = log((csc + one) / (csc - one));

    // s = sin^2(pi/n) = (2 - zeta_n - zeta_n^-1)/4 in the real subfield
    CycloElement c2 = CycloElement::root_of_unity(n, 1) + CycloElement::root_of_unity(n, -1);
    CycloElement s = (CycloElement::from_rational(n, Rational(2)) - c2).scaled(Rational(1, 4));
    CycloElement numer = (CycloElement::one(n) + s).scaled(Rational(-2));
    CycloElement gram = numer * (CycloElement::one(n) - s).inverse();

    GeodesicData gd{n, perp, Real::of(2, prec) * perp, gram, std::nullopt};
    if (gram.is_rational()) gd.gram_entry_rational = gram.as_rational();
    return gd;
}

VinbergEntryResult vinberg_entry_is_integral(long n) {
    require_chain(n);
    Polynomial witness = minimal_polynomial(geodesic_data(n, 64).gram_entry);
    return {witness.is_monic() && witness.has_integer_coeffs(), std::move(witness)};
}

}  // namespace falc
