#pragma once

#include "falc/cyclotomic.hpp"
#include "falc/polynomial.hpp"
#include "falc/unit_subgroup.hpp"

namespace falc {

/// Invariant trace field of the fully augmented pretzel link complement
/// with n crossing circles, built exactly inside Q(zeta_N) for
/// N = lcm(4, 2n).  The canonical generator is the untwisted cusp shape
/// 2cos(pi/n)i, which is integral and gives monic integer minimal
/// polynomials (x^2+1, x^2+2, x^2+3 for n = 3, 4, 6).
struct TraceFieldDescriptor {
    long n;
    long conductor;          // cyclotomic level N = lcm(4, 2n)
    CycloElement generator;  // 2cos(pi/n) i as an element of Q(zeta_N)
    Polynomial min_poly;
    long degree;             // [kM_n : Q] = phi(n)
    UnitSubgroup stab;       // Galois stabilizer of the field in (Z/N)*
};

/// phi(n), computed from the prime factorization of n.
long euler_totient(long n);

/// Requires n >= 3 (smaller chains are not hyperbolic).
TraceFieldDescriptor build_trace_field(long n);

/// The generator alone, without the minimal-polynomial computation.
CycloElement trace_field_generator(long n);
long trace_field_conductor(long n);

/// Exact twisted-crossing cusp shape 2cos(pi/n)i / (1 + sign*cos(pi/n)i),
/// sign = +1 or -1, as an element of the same Q(zeta_N).
CycloElement twisted_cusp_shape_exact(long n, int sign);

/// True iff phi(n) = 2, i.e. n in {3, 4, 6}.
bool is_quadratic_imaginary(long n);

/// Checks the CM-field structure: the generator is purely imaginary, its
/// square is fixed by complex conjugation, and the totally real subfield
/// has degree phi(n)/2.
bool cm_field_check(const TraceFieldDescriptor& d);

/// Outcome of deciding kM_m = kM_n inside a common cyclotomic field.
struct FieldComparison {
    long m = 0, n = 0;
    long level = 0;  // lcm of the two conductors
    bool equal = false;
    /// A unit residue at the common level whose Galois action fixes one
    /// generator but moves the other; 0 when the fields are equal.
    long separating_residue = 0;
    long stab_order_m_at_level = 0;
    long stab_order_n_at_level = 0;
};

/// Decides field equality by comparing the stabilizer subgroups of both
/// generators inside (Z/L)*, L = lcm(N_m, N_n).  The stabilizer of a field
/// at the common level is the preimage of its stabilizer at its own level,
/// so the comparison runs over residues without any arithmetic in
/// Q(zeta_L).
FieldComparison compare_fields(long m, long n);

/// compare_fields(m, n).equal
bool fields_equal(long m, long n);

}  // namespace falc
