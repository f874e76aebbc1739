#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "falc/classify.hpp"
#include "falc/serialize.hpp"

using namespace falc;

TEST_CASE("pretzel fal identifiers") {
    auto m = PretzelFal::base(5);
    CHECK(m.is_base());
    CHECK(!m.is_prime_family());
    CHECK(m.twists_string() == "00000");

    auto p = PretzelFal::prime_family(5);
    CHECK(p.twists_string() == "01111");
    CHECK(p.is_prime_family());

    CHECK(PretzelFal::parse(5, "01111").is_prime_family());
    CHECK(!PretzelFal::parse(5, "01101").is_prime_family());
    CHECK_THROWS_AS(PretzelFal::parse(5, "0110"), std::invalid_argument);
    CHECK_THROWS_AS(PretzelFal::parse(5, "01102"), std::invalid_argument);
    CHECK_THROWS_AS(PretzelFal::base(2), std::invalid_argument);
}

TEST_CASE("arithmeticity verdicts") {
    CHECK(is_arithmetic(3).verdict == Verdict::arithmetic);
    CHECK(is_arithmetic(4).verdict == Verdict::arithmetic);
    CHECK_THROWS_AS(is_arithmetic(2), std::invalid_argument);

    auto v6 = is_arithmetic(6);
    CHECK(v6.verdict == Verdict::non_arithmetic);
    bool vinberg_found = false;
    for (const auto& e : v6.evidence)
        if (e.rule == ArithRule::vinberg_rule) {
            vinberg_found = true;
            CHECK(e.outcome == RuleOutcome::decisive_non_arithmetic);
            REQUIRE(e.exact_witness.has_value());
            CHECK(*e.exact_witness == "-10/3");
        }
    CHECK(vinberg_found);
    CHECK(evidence_chain_consistent(v6));

    // n = 20: degree rule decisive, threshold corroboration attached
    auto v20 = is_arithmetic(20);
    CHECK(v20.verdict == Verdict::non_arithmetic);
    bool degree_decisive = false, threshold = false;
    for (const auto& e : v20.evidence) {
        if (e.rule == ArithRule::degree_rule && e.outcome == RuleOutcome::decisive_non_arithmetic)
            degree_decisive = true;
        if (e.rule == ArithRule::geodesic_threshold &&
            e.outcome == RuleOutcome::corroborating_non_arithmetic)
            threshold = true;
    }
    CHECK(degree_decisive);
    CHECK(threshold);

    // n = 9 without a table: corroboration explicitly unavailable
    auto v9 = is_arithmetic(9);
    bool unavailable = false;
    for (const auto& e : v9.evidence)
        if (e.rule == ArithRule::nr_table_comparison && e.outcome == RuleOutcome::unavailable) {
            unavailable = true;
            CHECK(e.detail.find("external table not loaded") != std::string::npos);
        }
    CHECK(unavailable);

    // ... and an empty loaded table is also marked unavailable, not vacuous
    NeumannReidTable empty;
    auto v9e = is_arithmetic(9, empty);
    bool empty_marked = false;
    for (const auto& e : v9e.evidence)
        if (e.rule == ArithRule::nr_table_comparison && e.outcome == RuleOutcome::unavailable)
            empty_marked = true;
    CHECK(empty_marked);

    // a table entry matching the geodesic length makes the comparison
    // inconclusive: the length test then cannot corroborate
    NeumannReidTable matching;
    matching.entries.push_back(
        {geodesic_data(9).closed_length.str(14), 1, "synthetic-match-entry"});
    auto v9m = is_arithmetic(9, matching);
    bool inconclusive_match = false;
    for (const auto& e : v9m.evidence)
        if (e.rule == ArithRule::nr_table_comparison && e.outcome == RuleOutcome::inconclusive)
            inconclusive_match = true;
    CHECK(inconclusive_match);
    CHECK(v9m.verdict == Verdict::non_arithmetic);  // the degree rule still decides
    CHECK(evidence_chain_consistent(v9m));
}

TEST_CASE("commensurability") {
    auto a = PretzelFal::base(5);
    auto b = PretzelFal::parse(5, "01101");
    auto r = commensurable(a, b);
    CHECK(r.commensurable);
    CHECK(r.reason == "common-reflection-orbifold");

    auto r34 = commensurable(PretzelFal::base(3), PretzelFal::base(4));
    CHECK(!r34.commensurable);
    CHECK(r34.reason == "distinct-trace-fields");

    auto r47 = commensurable(PretzelFal::base(4), PretzelFal::base(7));
    CHECK(!r47.commensurable);
    CHECK(r47.reason == "arithmetic-mismatch");

    auto r56 = commensurable(PretzelFal::base(5), PretzelFal::base(6));
    CHECK(!r56.commensurable);
    CHECK(r56.reason == "minimal-orbifold-volume");
}

TEST_CASE("symmetry data") {
    auto m7 = symmetry_data(PretzelFal::base(7));
    CHECK(m7.sym_plus_order == 56);
    CHECK(m7.sym_order == 112);
    CHECK(m7.hidden_count == 0);
    CHECK(m7.cover_degree == 112);
    CHECK(!m7.hidden_infinite);
    REQUIRE(m7.orbifold_volume_orientable.has_value());

    auto p7 = symmetry_data(PretzelFal::prime_family(7));
    CHECK(p7.sym_order == 8);
    CHECK(p7.hidden_count == 14);
    CHECK(!p7.sym_plus_order.has_value());
    CHECK(p7.cover_degree == 112);

    auto m3 = symmetry_data(PretzelFal::base(3));
    CHECK(m3.hidden_infinite);
    CHECK(!m3.sym_order.has_value());

    auto p4 = symmetry_data(PretzelFal::prime_family(4));
    CHECK(p4.hidden_infinite);  // n = 4 partners are arithmetic

    auto other = symmetry_data(PretzelFal::parse(6, "010010"));
    CHECK(other.kind == ManifoldKind::other);
    CHECK(!other.sym_order.has_value());
    CHECK(!other.hidden_count.has_value());
    CHECK(other.orbifold_volume_orientable.has_value());  // class-level data still applies

    // n = 6 note records the externally computed group order
    auto m6 = symmetry_data(PretzelFal::base(6));
    CHECK(m6.sym_order == 96);
    CHECK(m6.note.find("96") != std::string::npos);
}

TEST_CASE("hidden symmetry bounds") {
    const Real eps = Real::parse("0.01");
    auto b = hidden_symmetry_bounds(100, eps);
    CHECK(b.contains_two_n);
    CHECK(b.lower < Real::of(200));
    CHECK(Real::of(200) < b.upper);
    CHECK(b.smallest_valid_n >= 5);

    CHECK_THROWS_AS(hidden_symmetry_bounds(4, eps), std::invalid_argument);
    CHECK_THROWS_AS(hidden_symmetry_bounds(10, Real::of(0)), std::invalid_argument);
    CHECK_THROWS_AS(hidden_symmetry_bounds(10, Real::of(1)), std::invalid_argument);  // >= L(pi/4)

    // smaller eps gives a tighter bracket
    auto tight = hidden_symmetry_bounds(100, Real::parse("0.001"));
    CHECK((tight.upper - tight.lower) < (b.upper - b.lower));
}

TEST_CASE("max hidden symmetries bound") {
    CHECK(max_hidden_symmetries(Real::of(40), Real::parse("0.04")) == Real::of(1000));
    CHECK_THROWS_AS(max_hidden_symmetries(Real::of(40), Real::of(0)), std::invalid_argument);
    CHECK_THROWS_AS(max_hidden_symmetries(Real::of(40), Real::of(-1)), std::invalid_argument);
}

TEST_CASE("length table loading") {
    auto t = nr_table_from_json(Json::parse(
        R"([{"length": "1.087070145", "d": 1, "source": "external table, row 1"}])"));
    CHECK(t.entries.size() == 1);
    CHECK(t.entries[0].d == 1);

    CHECK_THROWS(nr_table_from_json(Json::parse(R"([{"length": "0.5", "d": 1, "source": "x"}])")));
    CHECK_THROWS(nr_table_from_json(Json::parse(R"([{"length": "2.0", "d": 1, "source": "x"}])")));
    CHECK_THROWS(nr_table_from_json(Json::parse(R"([{"length": "1.0", "d": 1, "source": ""}])")));
    CHECK_THROWS(nr_table_from_json(Json::parse(R"({"not": "a list"})")));

    // boundary: the cap itself is admissible, the cutoff is not
    CHECK_NOTHROW(nr_table_from_json(
        Json::parse(R"([{"length": "1.9248473002", "d": 7, "source": "boundary"}])")));
    CHECK_THROWS(nr_table_from_json(
        Json::parse(R"([{"length": "0.862554627", "d": 7, "source": "boundary"}])")));
}
