#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

#include "falc/report.hpp"
#include "falc/verify.hpp"
#include "falc/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitMissingData = 3;

struct CommonOpts {
    long precision = falc::kDefaultPrecision;
    long digits = 40;
    std::string format = "text";
    std::string cache_path;
    std::string nr_table_path;
    std::string v0;
};

std::optional<falc::NeumannReidTable> load_table_or_warn(const std::string& path, bool strict) {
    if (path.empty()) return std::nullopt;
    try {
        return falc::load_nr_table_file(path);
    } catch (const std::exception& e) {
        if (strict) throw;
        std::cerr << "warning: " << e.what() << "; corroboration marked unavailable\n";
        return std::nullopt;
    }
}

void print_fields_rows(const std::vector<falc::FieldsRow>& rows, const std::string& format) {
    if (format == "csv") {
        std::cout << "n,phi,min_poly,conductor\n";
        for (const auto& r : rows)
            std::cout << r.n << "," << r.phi << "," << r.min_poly << "," << r.conductor << "\n";
    } else if (format == "json") {
        falc::Json j = falc::Json::array();
        for (const auto& r : rows)
            j.push_back(falc::Json{
                {"n", r.n}, {"phi", r.phi}, {"min_poly", r.min_poly}, {"conductor", r.conductor}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "  n  phi(n)  conductor  min poly\n";
        for (const auto& r : rows)
            std::cout << "  " << r.n << "  " << r.phi << "  " << r.conductor << "  " << r.min_poly
                      << "\n";
    }
}

void print_classify_rows(const std::vector<falc::ClassifyRow>& rows, const std::string& format) {
    if (format == "csv") {
        std::cout << "n,verdict,evidence,commensurability_key,volume,f\n";
        for (const auto& r : rows)
            std::cout << r.n << "," << r.verdict << "," << r.evidence_codes << ","
                      << r.commensurability_key << "," << r.volume << "," << r.orbifold_f << "\n";
    } else if (format == "json") {
        falc::Json j = falc::Json::array();
        for (const auto& r : rows)
            j.push_back(falc::Json{{"n", r.n},
                                   {"verdict", r.verdict},
                                   {"evidence", r.evidence_codes},
                                   {"commensurability_key", r.commensurability_key},
                                   {"volume", r.volume},
                                   {"f", r.orbifold_f}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : rows)
            std::cout << "n=" << r.n << "  " << r.verdict << "  [" << r.evidence_codes << "]  vol="
                      << r.volume << "  f=" << r.orbifold_f << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants and commensurability classification for fully augmented pretzel links"};
    app.set_version_flag("--version", falc::kToolVersion);
    app.require_subcommand(1);

    CommonOpts opt;
    if (const char* env = std::getenv("FALC_CACHE")) opt.cache_path = env;

    long report_n = 0;
    std::string report_twists;
    auto* report = app.add_subcommand("report", "full invariant report for one manifold");
    report->add_option("--n", report_n, "number of crossing circles (>= 3)")->required();
    report->add_option("--twists", report_twists, "twist bits, e.g. 01101 (default: all zero)");
    report->add_option("--format", opt.format, "json|text")->default_val("text");
    report->add_option("--precision", opt.precision, "working precision in bits");
    report->add_option("--digits", opt.digits, "printed significant digits");
    report->add_option("--nr-table", opt.nr_table_path, "admissible-length table (JSON)");
    report->add_option("--cache", opt.cache_path, "trace-field cache file");
    report->add_option("--v0", opt.v0, "minimal one-cusped orbifold volume, enables the vol/v0 bound");

    long fields_max = 0, equal_m = 0, equal_n = 0;
    bool fields_table_flag = false;
    auto* fields = app.add_subcommand("fields", "invariant trace field tables and comparisons");
    fields->add_flag("--table", fields_table_flag, "emit the field table for 3..max");
    fields->add_option("--max", fields_max, "largest n for --table");
    auto* equal_opt =
        fields->add_option("--equal", "decide kM_m = kM_n for a pair m n")->expected(2);
    fields->add_option("--format", opt.format, "json|csv|text")->default_val("text");
    fields->add_option("--precision", opt.precision, "working precision in bits");
    fields->add_option("--cache", opt.cache_path, "trace-field cache file");

    long range_lo = 0, range_hi = 0;
    std::string range_arg;
    auto* classify = app.add_subcommand("classify", "batch arithmeticity/commensurability table");
    classify->add_option("--range", range_arg, "inclusive range A..B")->required();
    classify->add_option("--format", opt.format, "json|csv|text")->default_val("text");
    classify->add_option("--precision", opt.precision, "working precision in bits");
    classify->add_option("--nr-table", opt.nr_table_path, "admissible-length table (JSON)");

    std::string suite = "all";
    std::string verify_format = "text";
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--suite", suite, "all|fields|geometry|graphs|symmetry")->default_val("all");
    verify->add_option("--precision", opt.precision, "working precision in bits");
    verify->add_option("--cache", opt.cache_path, "also re-verify this cache file");
    verify->add_option("--format", verify_format, "json|text")->default_val("text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
        app.exit(e);
        return kExitUsage;
    }

    if (opt.precision < 32) {
        std::cerr << "error: --precision must be at least 32 bits\n";
        return kExitUsage;
    }
    if (opt.digits < 1 || opt.digits > 1000) {
        std::cerr << "error: --digits must be between 1 and 1000\n";
        return kExitUsage;
    }

    try {
        if (report->parsed()) {
            falc::PretzelFal m = report_twists.empty()
                                     ? falc::PretzelFal::base(report_n)
                                     : falc::PretzelFal::parse(report_n, report_twists);
            falc::ReportOptions ropt;
            ropt.precision = opt.precision;
            ropt.digits = opt.digits;
            if (!opt.nr_table_path.empty()) {
                try {
                    ropt.nr_table = falc::load_nr_table_file(opt.nr_table_path);
                } catch (const std::exception& e) {
                    std::cerr << "error: " << e.what() << "\n";
                    return kExitMissingData;
                }
            }
            if (!opt.v0.empty()) ropt.v0 = falc::Real::parse(opt.v0, opt.precision);
            falc::DescriptorCache cache;
            bool use_cache = !opt.cache_path.empty();
            if (use_cache) {
                try {
                    cache = falc::DescriptorCache::load(opt.cache_path);
                } catch (const std::exception& e) {
                    std::cerr << "warning: cache ignored: " << e.what() << "\n";
                    cache = falc::DescriptorCache{};
                }
                ropt.cache = &cache;
            }
            falc::ReportDocument doc = falc::build_report(m, ropt);
            if (use_cache) cache.save(opt.cache_path);
            if (opt.format == "json")
                std::cout << falc::report_to_json(doc).dump(2) << "\n";
            else
                std::cout << falc::render_report_text(doc);
            return kExitOk;
        }

        if (fields->parsed()) {
            if (equal_opt->count() > 0) {
                auto vals = equal_opt->results();
                equal_m = std::stol(vals[0]);
                equal_n = std::stol(vals[1]);
                auto cmp = falc::compare_fields(equal_m, equal_n);
                if (opt.format == "json") {
                    falc::Json j{{"m", cmp.m},
                                 {"n", cmp.n},
                                 {"equal", cmp.equal},
                                 {"common_level", cmp.level},
                                 {"stabilizer_order_m", cmp.stab_order_m_at_level},
                                 {"stabilizer_order_n", cmp.stab_order_n_at_level},
                                 {"separating_residue",
                                  cmp.equal ? falc::Json(nullptr) : falc::Json(cmp.separating_residue)}};
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << (cmp.equal ? "true" : "false") << "\n";
                    std::cout << "common level " << cmp.level << "; stabilizer orders "
                              << cmp.stab_order_m_at_level << " and " << cmp.stab_order_n_at_level
                              << "\n";
                    if (!cmp.equal)
                        std::cout << "separated by the Galois action of residue "
                                  << cmp.separating_residue << "\n";
                }
                return kExitOk;
            }
            if (!fields_table_flag) {
                std::cerr << "error: fields needs --table --max M or --equal m n\n";
                return kExitUsage;
            }
            falc::DescriptorCache cache;
            bool use_cache = !opt.cache_path.empty();
            if (use_cache) {
                try {
                    cache = falc::DescriptorCache::load(opt.cache_path);
                } catch (const std::exception& e) {
                    std::cerr << "warning: cache ignored: " << e.what() << "\n";
                    cache = falc::DescriptorCache{};
                }
            }
            auto rows = falc::fields_table(fields_max, use_cache ? &cache : nullptr);
            if (use_cache) cache.save(opt.cache_path);
            print_fields_rows(rows, opt.format);
            return kExitOk;
        }

        if (classify->parsed()) {
            const auto sep = range_arg.find("..");
            if (sep == std::string::npos) {
                std::cerr << "error: --range expects A..B\n";
                return kExitUsage;
            }
            range_lo = std::stol(range_arg.substr(0, sep));
            range_hi = std::stol(range_arg.substr(sep + 2));
            auto table = load_table_or_warn(opt.nr_table_path, /*strict=*/false);
            auto rows = falc::classify_range(range_lo, range_hi, table, opt.precision, opt.digits);
            print_classify_rows(rows, opt.format);
            return kExitOk;
        }

        if (verify->parsed()) {
            auto results = falc::verify_suite(suite, opt.precision);
            if (!opt.cache_path.empty()) {
                falc::CheckResult cr;
                cr.name = "cache-verification";
                try {
                    auto cache = falc::DescriptorCache::load(opt.cache_path);
                    cr.pass = true;
                    cr.detail = std::to_string(cache.size()) + " cached descriptors re-verified";
                } catch (const std::exception& e) {
                    cr.pass = false;
                    cr.detail = e.what();
                }
                results.push_back(std::move(cr));
            }
            long passed = 0;
            for (const auto& r : results)
                if (r.pass) ++passed;
            if (verify_format == "json") {
                falc::Json checks = falc::Json::array();
                for (const auto& r : results)
                    checks.push_back(falc::Json{{"name", r.name},
                                                {"pass", r.pass},
                                                {"seconds", r.seconds},
                                                {"detail", r.detail}});
                falc::Json j{{"suite", suite},
                             {"passed", passed},
                             {"total", results.size()},
                             {"checks", checks}};
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& r : results)
                    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  ("
                              << static_cast<long>(r.seconds * 1000) << " ms)  " << r.detail << "\n";
                std::cout << passed << "/" << results.size() << " checks passed\n";
            }
            return passed == static_cast<long>(results.size()) ? kExitOk : kExitVerification;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
