#include "falc/tracefield.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace falc {

long euler_totient(long n) {
    if (n < 1) throw std::invalid_argument("euler_totient: argument must be positive");
    long phi = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        phi *= p - 1;
        while (n % p == 0) {
            n /= p;
            phi *= p;
        }
    }
    if (n > 1) phi *= n - 1;
    return phi;
}

static void require_chain(long n) {
    if (n < 3) throw std::invalid_argument("pretzel FAL requires n >= 3 crossing circles");
}

long trace_field_conductor(long n) {
    require_chain(n);
    return std::lcm(4L, 2 * n);
}

CycloElement trace_field_generator(long n) {
    const long N = trace_field_conductor(n);
    // 2cos(pi/n) i = zeta_4 * (zeta_2n + zeta_2n^-1)
    const long quarter = N / 4;
    const long step = N / (2 * n);
    return CycloElement::root_of_unity(N, quarter + step) +
           CycloElement::root_of_unity(N, quarter - step);
}

/// Horner evaluation of a rational polynomial at a cyclotomic element.
static CycloElement eval_poly_at(const Polynomial& p, const CycloElement& x) {
    CycloElement acc = CycloElement::zero(x.modulus());
    for (long k = p.degree(); k >= 0; --k)
        acc = acc * x + CycloElement::from_rational(x.modulus(), p.coeff(k));
    return acc;
}

TraceFieldDescriptor build_trace_field(long n) {
    require_chain(n);
    const long N = trace_field_conductor(n);
    CycloElement gen = trace_field_generator(n);
    Polynomial mp = minimal_polynomial(gen);
    const long degree = mp.degree();
    if (degree != euler_totient(n))
        throw std::logic_error("build_trace_field: field degree differs from phi(n)");
    UnitSubgroup stab = stabilizer(gen);
    const long units = static_cast<long>(units_modulo(N).size());
    if (stab.order() * degree != units)
        throw std::logic_error("build_trace_field: stabilizer order is inconsistent with the degree");
    if (!eval_poly_at(mp, gen).is_zero())
        throw std::logic_error("build_trace_field: generator does not satisfy its minimal polynomial");
    return TraceFieldDescriptor{n, N, std::move(gen), std::move(mp), degree, std::move(stab)};
}

CycloElement twisted_cusp_shape_exact(long n, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("twisted_cusp_shape_exact: sign must be +1 or -1");
    CycloElement gen = trace_field_generator(n);
    const long N = gen.modulus();
    CycloElement denom =
        CycloElement::one(N) + gen.scaled(Rational(sign, 2));  // 1 +/- cos(pi/n) i
    return gen * denom.inverse();
}

bool is_quadratic_imaginary(long n) {
    require_chain(n);
    return euler_totient(n) == 2;
}

bool cm_field_check(const TraceFieldDescriptor& d) {
    const long N = d.conductor;
    // complex conjugation negates the generator (it is purely imaginary)
    if (galois_apply(N - 1, d.generator) != -d.generator) return false;
    // ... and fixes its square, which generates the totally real subfield
    CycloElement sq = d.generator * d.generator;
    if (galois_apply(N - 1, sq) != sq) return false;
    const long units = static_cast<long>(units_modulo(N).size());
    const long real_degree = units / stabilizer(sq).order();
    return 2 * real_degree == d.degree;
}

// Stabilizers are reused heavily by the all-pairs distinctness scan.
static UnitSubgroup field_stabilizer(long n) {
    static std::mutex mu;
    static std::map<long, UnitSubgroup> memo;
    {
        std::scoped_lock lock(mu);
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
    }
    UnitSubgroup s = stabilizer(trace_field_generator(n));
    std::scoped_lock lock(mu);
    return memo.emplace(n, std::move(s)).first->second;
}

FieldComparison compare_fields(long m, long n) {
    require_chain(m);
    require_chain(n);
    FieldComparison out;
    out.m = m;
    out.n = n;
    const long Nm = trace_field_conductor(m);
    const long Nn = trace_field_conductor(n);
    const long L = std::lcm(Nm, Nn);
    out.level = L;

    UnitSubgroup sm = field_stabilizer(m);
    UnitSubgroup sn = field_stabilizer(n);
    out.stab_order_m_at_level = euler_totient(L) / (euler_totient(Nm) / sm.order());
    out.stab_order_n_at_level = euler_totient(L) / (euler_totient(Nn) / sn.order());

    std::vector<char> member_m(Nm, 0), member_n(Nn, 0);
    for (long a : sm.members) member_m[a] = 1;
    for (long a : sn.members) member_n[a] = 1;
    std::vector<char> unit_m(Nm, 0), unit_n(Nn, 0);
    for (long a = 0; a < Nm; ++a) unit_m[a] = std::gcd(a, Nm) == 1;
    for (long a = 0; a < Nn; ++a) unit_n[a] = std::gcd(a, Nn) == 1;

    // Compare the preimages of the two stabilizers inside (Z/L)*.  A unit
    // of L is a unit mod both conductors, so the scan needs no gcds.
    long am = 1 % Nm, an = 1 % Nn;
    for (long a = 1; a < L; ++a) {
        if (unit_m[am] && unit_n[an] && member_m[am] != member_n[an]) {
            out.equal = false;
            out.separating_residue = a;
            return out;
        }
        if (++am == Nm) am = 0;
        if (++an == Nn) an = 0;
    }
    out.equal = true;
    return out;
}

bool fields_equal(long m, long n) { return compare_fields(m, n).equal; }

}  // namespace falc
