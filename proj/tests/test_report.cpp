#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "falc/report.hpp"

using namespace falc;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("report content") {
    auto r6 = build_report(PretzelFal::base(6));
    CHECK(r6.verdict == "non-arithmetic");
    REQUIRE(r6.geodesic.gram_rational.has_value());
    CHECK(*r6.geodesic.gram_rational == "-10/3");
    CHECK(!r6.geodesic.gram_integral);
    CHECK(r6.symmetry.sym_order == 96);

    auto r3 = build_report(PretzelFal::base(3));
    CHECK(r3.field.min_poly == "x^2 + 1");
    CHECK(r3.verdict == "arithmetic");
    CHECK(r3.symmetry.hidden_infinite);

    auto r5 = build_report(PretzelFal::parse(5, "01111"));
    CHECK(r5.symmetry.hidden_count == 10);
    CHECK(r5.symmetry.sym_order == 8);
    // twisted cusp shapes present for a twisted manifold
    bool has_twisted = false;
    for (const auto& c : r5.cusp_shapes)
        if (c.kind == "twisted(+)") has_twisted = true;
    CHECK(has_twisted);
}

TEST_CASE("report json round trip") {
    ReportOptions opt;
    opt.v0 = Real::parse("0.039");
    for (auto m : {PretzelFal::base(3), PretzelFal::base(6), PretzelFal::parse(7, "0111111"),
                   PretzelFal::parse(6, "010010")}) {
        const ReportDocument r = build_report(m, opt);
        const ReportDocument back = report_from_json(report_to_json(r));
        CHECK(back == r);
        // rendering is deterministic
        CHECK(report_to_json(back).dump(2) == report_to_json(r).dump(2));
    }
}

TEST_CASE("descriptor cache round trip") {
    const auto path = temp_file("falc_test_cache.json");
    std::filesystem::remove(path);

    DescriptorCache cache = DescriptorCache::load(path.string());  // missing -> empty
    CHECK(cache.size() == 0);
    cache.store(build_trace_field(5));
    cache.store(build_trace_field(9));
    cache.save(path.string());

    DescriptorCache back = DescriptorCache::load(path.string());
    CHECK(back.size() == 2);
    REQUIRE(back.lookup(9) != nullptr);
    CHECK(back.lookup(9)->min_poly == build_trace_field(9).min_poly);
    CHECK(back.lookup(7) == nullptr);

    // tampering with the stored minimal polynomial must be caught on load
    std::ifstream in(path);
    Json j = Json::parse(in);
    in.close();
    j["entries"][0]["min_poly"][0] = "99";
    std::ofstream out(path);
    out << j.dump();
    out.close();
    CHECK_THROWS(DescriptorCache::load(path.string()));
    std::filesystem::remove(path);
}

TEST_CASE("cache does not change reports") {
    const auto path = temp_file("falc_test_cache2.json");
    std::filesystem::remove(path);

    ReportOptions plain;
    const ReportDocument without = build_report(PretzelFal::base(9), plain);

    DescriptorCache cache = DescriptorCache::load(path.string());
    ReportOptions cached;
    cached.cache = &cache;
    const ReportDocument first = build_report(PretzelFal::base(9), cached);
    cache.save(path.string());

    DescriptorCache reloaded = DescriptorCache::load(path.string());
    ReportOptions cached2;
    cached2.cache = &reloaded;
    const ReportDocument second = build_report(PretzelFal::base(9), cached2);

    CHECK(report_to_json(without).dump() == report_to_json(first).dump());
    CHECK(report_to_json(first).dump() == report_to_json(second).dump());
    std::filesystem::remove(path);
}

TEST_CASE("fields table") {
    auto rows = fields_table(10, nullptr);
    REQUIRE(rows.size() == 8);
    const long want_phi[8] = {2, 2, 4, 2, 6, 4, 6, 4};
    for (int i = 0; i < 8; ++i) {
        CHECK(rows[i].n == i + 3);
        CHECK(rows[i].phi == want_phi[i]);
    }
    CHECK(rows[0].min_poly == "x^2 + 1");
    CHECK(rows[3].min_poly == "x^2 + 3");
    CHECK_THROWS_AS(fields_table(2, nullptr), std::invalid_argument);
}

TEST_CASE("classify range") {
    auto rows = classify_range(3, 10, std::nullopt);
    REQUIRE(rows.size() == 8);
    for (const auto& r : rows) {
        const bool arith = r.verdict == "arithmetic";
        CHECK(arith == (r.n == 3 || r.n == 4));
    }
    // f column strictly increasing
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(Real::parse(rows[i].orbifold_f) > Real::parse(rows[i - 1].orbifold_f));
    CHECK_THROWS_AS(classify_range(2, 5, std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(classify_range(5, 4, std::nullopt), std::invalid_argument);
}

TEST_CASE("render text mentions the essentials") {
    const std::string t6 = render_report_text(build_report(PretzelFal::base(6)));
    CHECK(t6.find("-10/3") != std::string::npos);
    CHECK(t6.find("non-arithmetic") != std::string::npos);
    const std::string t3 = render_report_text(build_report(PretzelFal::base(3)));
    CHECK(t3.find("x^2 + 1") != std::string::npos);
}
