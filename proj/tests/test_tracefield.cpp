#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "falc/tracefield.hpp"

using namespace falc;

namespace {

Polynomial int_poly(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

long totient_oracle(long n) {
    long count = 0;
    for (long a = 1; a <= n; ++a)
        if (std::gcd(a, n) == 1) ++count;
    return count;
}

}  // namespace

TEST_CASE("euler totient") {
    CHECK(euler_totient(1) == 1);
    CHECK(euler_totient(12) == 4);
    CHECK(euler_totient(150) == totient_oracle(150));
    for (long n = 1; n <= 200; ++n) CHECK(euler_totient(n) == totient_oracle(n));
    CHECK_THROWS_AS(euler_totient(0), std::invalid_argument);
}

TEST_CASE("quadratic trace fields") {
    CHECK(build_trace_field(3).min_poly == int_poly({1, 0, 1}));   // Q(sqrt(-1))
    CHECK(build_trace_field(4).min_poly == int_poly({2, 0, 1}));   // Q(sqrt(-2))
    CHECK(build_trace_field(6).min_poly == int_poly({3, 0, 1}));   // Q(sqrt(-3))
    CHECK_THROWS_AS(build_trace_field(2), std::invalid_argument);
}

TEST_CASE("degrees and conductors") {
    auto d5 = build_trace_field(5);
    CHECK(d5.degree == 4);
    CHECK(d5.conductor == 20);
    CHECK(d5.min_poly.is_monic());
    CHECK(d5.min_poly.has_integer_coeffs());
    for (long n = 3; n <= 40; ++n) {
        auto d = build_trace_field(n);
        CHECK(d.degree == euler_totient(n));
        CHECK(d.conductor == std::lcm(4L, 2 * n));
        CHECK(d.min_poly.has_integer_coeffs());  // the generator is an algebraic integer
        CHECK(d.stab.order() * d.degree == static_cast<long>(units_modulo(d.conductor).size()));
    }
}

TEST_CASE("field comparison") {
    CHECK(fields_equal(7, 7));
    CHECK(!fields_equal(3, 6));

    auto cmp = compare_fields(3, 6);
    CHECK(cmp.level == 12);
    CHECK(cmp.stab_order_m_at_level == 2);
    CHECK(cmp.stab_order_n_at_level == 2);
    CHECK(cmp.separating_residue > 0);

    for (long m = 3; m <= 25; ++m)
        for (long n = m + 1; n <= 25; ++n) CHECK(!fields_equal(m, n));

    // reflexive and symmetric (an equivalence relation on the tested range)
    for (long n = 3; n <= 12; ++n) CHECK(fields_equal(n, n));
    for (long m = 3; m <= 12; ++m)
        for (long n = 3; n <= 12; ++n) CHECK(fields_equal(m, n) == fields_equal(n, m));
}

TEST_CASE("quadratic imaginary detection") {
    CHECK(is_quadratic_imaginary(3));
    CHECK(is_quadratic_imaginary(4));
    CHECK(is_quadratic_imaginary(6));
    CHECK(!is_quadratic_imaginary(5));
    CHECK(!is_quadratic_imaginary(8));
}

TEST_CASE("CM structure") {
    for (long n : {3L, 5L, 8L, 12L}) CHECK(cm_field_check(build_trace_field(n)));
    // n = 8: the totally real subfield Q(cos(pi/4)) has degree 2 = phi(8)/2
    auto d8 = build_trace_field(8);
    const CycloElement sq = d8.generator * d8.generator;
    CHECK(static_cast<long>(units_modulo(d8.conductor).size()) / stabilizer(sq).order() == 2);
}

TEST_CASE("twisted cusp shape value") {
    // n = 3: 2cos(pi/3)i / (1 + cos(pi/3)i) = i/(1 + i/2) = 2/5 + 4/5 i
    const CycloElement t = twisted_cusp_shape_exact(3, +1);
    std::vector<Rational> expect(4, Rational(0));
    expect[0] = Rational(2, 5);
    expect[3] = Rational(4, 5);  // coefficient of zeta_12^3 = i
    CHECK(t == CycloElement::from_coords(12, expect));
    CHECK_THROWS_AS(twisted_cusp_shape_exact(5, 2), std::invalid_argument);

    // both signs lie in the trace field
    for (long n : {3L, 4L, 5L, 6L, 10L}) {
        const UnitSubgroup fs = stabilizer(trace_field_generator(n));
        CHECK(stabilizer(twisted_cusp_shape_exact(n, +1)).contains_subgroup(fs));
        CHECK(stabilizer(twisted_cusp_shape_exact(n, -1)).contains_subgroup(fs));
    }
}

TEST_CASE("generator square identity") {
    for (long n = 3; n <= 12; ++n) {
        const CycloElement gen = trace_field_generator(n);
        const long N = gen.modulus();
        const CycloElement rhs = -(CycloElement::from_rational(N, Rational(2)) +
                                   CycloElement::root_of_unity(N, N / n) +
                                   CycloElement::root_of_unity(N, -(N / n)));
        CHECK(gen * gen == rhs);
    }
}
