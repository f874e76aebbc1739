#pragma once

#include <optional>
#include <string>
#include <vector>

#include "falc/classify.hpp"
#include "falc/serialize.hpp"

namespace falc {

/// Fully rendered per-manifold report.  Numeric values are stored as
/// decimal strings at a fixed digit count so that reports are
/// deterministic, diffable, and round-trip exactly through JSON.
struct ReportDocument {
    std::string schema = "falc/report/1";
    std::string tool_version;
    long n = 0;
    std::string twists;
    long precision = kDefaultPrecision;
    long digits = 40;

    struct CuspEntry {
        std::string kind;
        std::optional<long> exact_modulus;
        std::optional<std::vector<std::string>> exact_coords;
        std::optional<std::string> numeric;
        std::optional<std::string> meridian_length;
        std::optional<std::string> longitude_lower_bound;
        bool operator==(const CuspEntry&) const = default;
    };
    std::vector<CuspEntry> cusp_shapes;

    struct FieldSummary {
        long conductor = 0;
        long degree = 0;
        long stabilizer_order = 0;
        std::string min_poly;                    // pretty form
        std::vector<std::string> min_poly_coeffs;  // exact, lowest degree first
        bool operator==(const FieldSummary&) const = default;
    };
    FieldSummary field;

    std::string volume;
    std::string orbifold_f;

    struct GeodesicSummary {
        std::string perpendicular_length;
        std::string closed_length;
        long gram_modulus = 0;
        std::vector<std::string> gram_coords;
        std::optional<std::string> gram_rational;
        bool gram_integral = false;
        std::string gram_min_poly;
        bool operator==(const GeodesicSummary&) const = default;
    };
    GeodesicSummary geodesic;

    std::string verdict;
    struct EvidenceEntry {
        std::string rule, outcome, detail;
        std::optional<std::string> witness;
        bool operator==(const EvidenceEntry&) const = default;
    };
    std::vector<EvidenceEntry> evidence;

    std::string commensurability_key;

    struct SymmetrySummary {
        std::string kind;
        std::optional<long> sym_plus_order, sym_order, hidden_count, cover_degree;
        bool hidden_infinite = false;
        std::optional<std::string> orbifold_volume_orientable, orbifold_volume_full;
        std::string note;
        bool operator==(const SymmetrySummary&) const = default;
    };
    SymmetrySummary symmetry;

    std::optional<std::string> hidden_upper_bound;  // vol / v0, when v0 was supplied

    bool operator==(const ReportDocument&) const = default;
};

struct ReportOptions {
    long precision = kDefaultPrecision;
    long digits = 40;
    std::optional<NeumannReidTable> nr_table;
    std::optional<Real> v0;
    DescriptorCache* cache = nullptr;  // optional, consulted and filled
};

ReportDocument build_report(const PretzelFal& m, const ReportOptions& opt = {});

Json report_to_json(const ReportDocument& r);
ReportDocument report_from_json(const Json& j);
std::string render_report_text(const ReportDocument& r);

/// One row of the `fields --table` output.
struct FieldsRow {
    long n;
    long phi;
    std::string min_poly;
    long conductor;
};
std::vector<FieldsRow> fields_table(long max_n, DescriptorCache* cache = nullptr);

/// One row of the `classify --range` output.
struct ClassifyRow {
    long n;
    std::string verdict;
    std::string evidence_codes;  // "rule:outcome;..."
    std::string commensurability_key;
    std::string volume;
    std::string orbifold_f;
};
std::vector<ClassifyRow> classify_range(long lo, long hi, const std::optional<NeumannReidTable>& table,
                                        long prec = kDefaultPrecision, long digits = 40);

std::string commensurability_key_for(long n);

}  // namespace falc
