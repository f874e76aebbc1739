#pragma once

#include <optional>

#include "falc/bigreal.hpp"
#include "falc/polynomial.hpp"
#include "falc/rational.hpp"

namespace falc {

/// Lobachevsky function L(theta) = -integral_0^theta ln|2 sin x| dx,
/// evaluated to the requested binary precision (>= 32 bits).
///
/// After reducing theta mod pi into [-pi/2, pi/2] (the function is odd and
/// pi-periodic), the value is summed as
///     L(u) = u - u ln(2u) + sum_{m>=1} zeta(2m) u^(2m+1) / (m(2m+1) pi^(2m)).
/// With q = (u/pi)^2 <= 1/4, the terms are bounded by 2u q^m, so truncating
/// after the first term below 2^-(wp+2) leaves a tail below
/// (4/3) 2^-(wp+2) at working precision wp = prec + 64.
Real lobachevsky(const Real& theta, long prec = kDefaultPrecision);

/// vol(M_n) = 8n (L(pi/4 + pi/2n) + L(pi/4 - pi/2n)); identical for every
/// half-twist partner of M_n.  Requires n >= 3.
Real volume(long n, long prec = kDefaultPrecision);

/// f(n) = vol(M_n) / 8n, the volume of the minimal orientable orbifold
/// commensurable with a non-arithmetic M_n.
Real orbifold_volume_f(long n, long prec = kDefaultPrecision);

/// f'(n) = pi/(2 n^2) ln|sin(pi/4 + pi/2n) / sin(pi/4 - pi/2n)|.
Real orbifold_volume_f_derivative(long n, long prec = kDefaultPrecision);

/// Figure-eight knot complement volume, computed as 6 L(pi/3).
Real figure_eight_volume(long prec = kDefaultPrecision);

/// Volume of the regular ideal octahedron, 8 L(pi/4).
Real ideal_octahedron_volume(long prec = kDefaultPrecision);

/// Circle packing radii for the polyhedron of M_n, normalized so the ring
/// circles are unit circles.  With theta = pi/n: the two white circles
/// enclosing the ring have radii csc(theta) -/+ 1, and the shaded circles
/// have radii r = tan(theta)(csc(theta)-1), R = tan(theta)(csc(theta)+1).
struct PackingData {
    long n;
    Real white_outer;   // csc(pi/n) + 1
    Real white_inner;   // csc(pi/n) - 1
    long unit_count;    // n ring circles of radius 1
    Real shaded_small;  // r
    Real shaded_large;  // R
};

/// Computes the packing radii and checks 1/(2r) + 1/(2R) = sec(theta)
/// at working precision.
PackingData packing_radii(long n, long prec = kDefaultPrecision);

/// Shape of one cusp tile of the top polyhedron: i sec(pi/n).
Complex tile_shape(long n, long prec = kDefaultPrecision);

enum class CuspKind { untwisted, twisted_positive, twisted_negative, knot_circle_bounds };

/// Cusp shape, exact (in the invariant trace field) and numeric.  The
/// knot-circle kind carries length bounds instead of a shape: its meridian
/// has length exactly 2 while the longitude has length at least 2n.
struct CuspShapeValue {
    CuspKind kind;
    std::optional<CycloElement> exact;
    std::optional<Complex> numeric;
    std::optional<Real> meridian_length;
    std::optional<Real> longitude_lower_bound;
};

CuspShapeValue cusp_shape(long n, CuspKind kind, long prec = kDefaultPrecision);

/// Data for the short closed geodesic running between the two nested white
/// faces: l(gamma+) = ln((csc(pi/n)+1)/(csc(pi/n)-1)) and l(gamma) twice
/// that.  The Gram-matrix entry for the corresponding disjoint faces is
/// -2cosh(l(gamma+)) = -2(1+s)/(1-s) with s = sin^2(pi/n), computed
/// exactly in the real subfield of Q(zeta_n).
struct GeodesicData {
    long n;
    Real perpendicular_length;            // l(gamma+)
    Real closed_length;                   // l(gamma) = 2 l(gamma+)
    CycloElement gram_entry;              // exact, at level n
    std::optional<Rational> gram_entry_rational;  // present when the entry is rational
};

GeodesicData geodesic_data(long n, long prec = kDefaultPrecision);

/// Algebraic-integer test for the Gram entry above: true iff its monic
/// minimal polynomial has integer coefficients.  The polynomial is
/// returned as the witness either way.
struct VinbergEntryResult {
    bool integral;
    Polynomial witness;
};

VinbergEntryResult vinberg_entry_is_integral(long n);

}  // namespace falc
