#include "falc/report.hpp"

#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "falc/hypgeom.hpp"
#include "falc/version.hpp"

namespace falc {

namespace {

std::vector<std::string> coord_strings(const CycloElement& x) {
    std::vector<std::string> out;
    out.reserve(x.coords().size());
    for (const auto& r : x.coords()) out.push_back(r.str());
    return out;
}

std::vector<std::string> poly_strings(const Polynomial& p) {
    std::vector<std::string> out;
    for (const auto& r : p.coeffs()) out.push_back(r.str());
    return out;
}

const char* cusp_kind_name(CuspKind k) {
    switch (k) {
        case CuspKind::untwisted: return "untwisted";
        case CuspKind::twisted_positive: return "twisted(+)";
        case CuspKind::twisted_negative: return "twisted(-)";
        case CuspKind::knot_circle_bounds: return "knot-circle";
    }
    return "?";
}

ReportDocument::CuspEntry cusp_entry(long n, CuspKind kind, long prec, long digits) {
    CuspShapeValue v = cusp_shape(n, kind, prec);
    ReportDocument::CuspEntry e;
    e.kind = cusp_kind_name(kind);
    if (v.exact) {
        e.exact_modulus = v.exact->modulus();
        e.exact_coords = coord_strings(*v.exact);
    }
    if (v.numeric) e.numeric = v.numeric->str(digits);
    if (v.meridian_length) e.meridian_length = v.meridian_length->str(digits);
    if (v.longitude_lower_bound) e.longitude_lower_bound = v.longitude_lower_bound->str(digits);
    return e;
}

const char* kind_name(ManifoldKind k) {
    switch (k) {
        case ManifoldKind::base: return "base";
        case ManifoldKind::prime_family: return "prime-family";
        case ManifoldKind::other: return "other";
    }
    return "?";
}

}  // namespace

std::string commensurability_key_for(long n) { return "pretzel-fal/n=" + std::to_string(n); }

ReportDocument build_report(const PretzelFal& m, const ReportOptions& opt) {
    m.validate();
    const long n = m.n;
    const long prec = opt.precision;
    const long digits = opt.digits;

    ReportDocument r;
    r.tool_version = kToolVersion;
    r.n = n;
    r.twists = m.twists_string();
    r.precision = prec;
    r.digits = digits;

    // cusp shapes: untwisted tiles always exist; twisted kinds are included
    // once some crossing circle carries a half-twist (both signs, since the
    // handedness is not an invariant of the data); knot-circle bounds always
    r.cusp_shapes.push_back(cusp_entry(n, CuspKind::untwisted, prec, digits));
    if (!m.is_base()) {
        r.cusp_shapes.push_back(cusp_entry(n, CuspKind::twisted_positive, prec, digits));
        r.cusp_shapes.push_back(cusp_entry(n, CuspKind::twisted_negative, prec, digits));
    }
    r.cusp_shapes.push_back(cusp_entry(n, CuspKind::knot_circle_bounds, prec, digits));

    const TraceFieldDescriptor* cached = opt.cache ? opt.cache->lookup(n) : nullptr;
    TraceFieldDescriptor fresh{0, 0, CycloElement::zero(1), Polynomial(), 0, UnitSubgroup{}};
    if (!cached) {
        fresh = build_trace_field(n);
        if (opt.cache) opt.cache->store(fresh);
    }
    const TraceFieldDescriptor& d = cached ? *cached : fresh;
    r.field = {d.conductor, d.degree, d.stab.order(), d.min_poly.str(), poly_strings(d.min_poly)};

    r.volume = volume(n, prec).str(digits);
    r.orbifold_f = orbifold_volume_f(n, prec).str(digits);

    GeodesicData gd = geodesic_data(n, prec);
    VinbergEntryResult vr = vinberg_entry_is_integral(n);
    r.geodesic.perpendicular_length = gd.perpendicular_length.str(digits);
    r.geodesic.closed_length = gd.closed_length.str(digits);
    r.geodesic.gram_modulus = gd.gram_entry.modulus();
    r.geodesic.gram_coords = coord_strings(gd.gram_entry);
    if (gd.gram_entry_rational) r.geodesic.gram_rational = gd.gram_entry_rational->str();
    r.geodesic.gram_integral = vr.integral;
    r.geodesic.gram_min_poly = vr.witness.str();

    ArithmeticityVerdict verdict = is_arithmetic(n, opt.nr_table, prec);
    r.verdict = verdict_name(verdict.verdict);
    for (const auto& e : verdict.evidence)
        r.evidence.push_back({rule_name(e.rule), outcome_name(e.outcome), e.detail, e.exact_witness});

    r.commensurability_key = commensurability_key_for(n);

    SymmetryData sd = symmetry_data(m, prec);
    r.symmetry.kind = kind_name(sd.kind);
    r.symmetry.sym_plus_order = sd.sym_plus_order;
    r.symmetry.sym_order = sd.sym_order;
    r.symmetry.hidden_count = sd.hidden_count;
    r.symmetry.cover_degree = sd.cover_degree;
    r.symmetry.hidden_infinite = sd.hidden_infinite;
    if (sd.orbifold_volume_orientable)
        r.symmetry.orbifold_volume_orientable = sd.orbifold_volume_orientable->str(digits);
    if (sd.orbifold_volume_full)
        r.symmetry.orbifold_volume_full = sd.orbifold_volume_full->str(digits);
    r.symmetry.note = sd.note;

    if (opt.v0) r.hidden_upper_bound = max_hidden_symmetries(volume(n, prec), *opt.v0).str(digits);
    return r;
}

namespace {

Json opt_str(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }
Json opt_long(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<std::string> get_opt_str(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::string>();
}

std::optional<long> get_opt_long(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<long>();
}

}  // namespace

Json report_to_json(const ReportDocument& r) {
    Json cusps = Json::array();
    for (const auto& c : r.cusp_shapes) {
        Json jc{{"kind", c.kind}};
        jc["exact_modulus"] = opt_long(c.exact_modulus);
        jc["exact_coords"] = c.exact_coords ? Json(*c.exact_coords) : Json(nullptr);
        jc["numeric"] = opt_str(c.numeric);
        jc["meridian_length"] = opt_str(c.meridian_length);
        jc["longitude_lower_bound"] = opt_str(c.longitude_lower_bound);
        cusps.push_back(std::move(jc));
    }
    Json evidence = Json::array();
    for (const auto& e : r.evidence)
        evidence.push_back(Json{{"rule", e.rule},
                                {"outcome", e.outcome},
                                {"detail", e.detail},
                                {"witness", opt_str(e.witness)}});
    Json j{{"schema", r.schema},
           {"tool_version", r.tool_version},
           {"n", r.n},
           {"twists", r.twists},
           {"precision", r.precision},
           {"digits", r.digits},
           {"cusp_shapes", cusps},
           {"trace_field",
            Json{{"conductor", r.field.conductor},
                 {"degree", r.field.degree},
                 {"stabilizer_order", r.field.stabilizer_order},
                 {"min_poly", r.field.min_poly},
                 {"min_poly_coeffs", r.field.min_poly_coeffs}}},
           {"volume", r.volume},
           {"orbifold_f", r.orbifold_f},
           {"geodesic",
            Json{{"perpendicular_length", r.geodesic.perpendicular_length},
                 {"closed_length", r.geodesic.closed_length},
                 {"gram_modulus", r.geodesic.gram_modulus},
                 {"gram_coords", r.geodesic.gram_coords},
                 {"gram_rational", opt_str(r.geodesic.gram_rational)},
                 {"gram_integral", r.geodesic.gram_integral},
                 {"gram_min_poly", r.geodesic.gram_min_poly}}},
           {"verdict", r.verdict},
           {"evidence", evidence},
           {"commensurability_key", r.commensurability_key},
           {"symmetry",
            Json{{"kind", r.symmetry.kind},
                 {"sym_plus_order", opt_long(r.symmetry.sym_plus_order)},
                 {"sym_order", opt_long(r.symmetry.sym_order)},
                 {"hidden_count", opt_long(r.symmetry.hidden_count)},
                 {"hidden_infinite", r.symmetry.hidden_infinite},
                 {"cover_degree", opt_long(r.symmetry.cover_degree)},
                 {"orbifold_volume_orientable", opt_str(r.symmetry.orbifold_volume_orientable)},
                 {"orbifold_volume_full", opt_str(r.symmetry.orbifold_volume_full)},
                 {"note", r.symmetry.note}}},
           {"hidden_upper_bound", opt_str(r.hidden_upper_bound)}};
    return j;
}

ReportDocument report_from_json(const Json& j) {
    ReportDocument r;
    r.schema = j.at("schema").get<std::string>();
    if (r.schema != "falc/report/1") throw std::runtime_error("report: unknown schema");
    r.tool_version = j.at("tool_version").get<std::string>();
    r.n = j.at("n").get<long>();
    r.twists = j.at("twists").get<std::string>();
    r.precision = j.at("precision").get<long>();
    r.digits = j.at("digits").get<long>();
    for (const auto& jc : j.at("cusp_shapes")) {
        ReportDocument::CuspEntry c;
        c.kind = jc.at("kind").get<std::string>();
        c.exact_modulus = get_opt_long(jc, "exact_modulus");
        if (jc.contains("exact_coords") && !jc.at("exact_coords").is_null())
            c.exact_coords = jc.at("exact_coords").get<std::vector<std::string>>();
        c.numeric = get_opt_str(jc, "numeric");
        c.meridian_length = get_opt_str(jc, "meridian_length");
        c.longitude_lower_bound = get_opt_str(jc, "longitude_lower_bound");
        r.cusp_shapes.push_back(std::move(c));
    }
    const Json& f = j.at("trace_field");
    r.field = {f.at("conductor").get<long>(), f.at("degree").get<long>(),
               f.at("stabilizer_order").get<long>(), f.at("min_poly").get<std::string>(),
               f.at("min_poly_coeffs").get<std::vector<std::string>>()};
    r.volume = j.at("volume").get<std::string>();
    r.orbifold_f = j.at("orbifold_f").get<std::string>();
    const Json& g = j.at("geodesic");
    r.geodesic.perpendicular_length = g.at("perpendicular_length").get<std::string>();
    r.geodesic.closed_length = g.at("closed_length").get<std::string>();
    r.geodesic.gram_modulus = g.at("gram_modulus").get<long>();
    r.geodesic.gram_coords = g.at("gram_coords").get<std::vector<std::string>>();
    r.geodesic.gram_rational = get_opt_str(g, "gram_rational");
    r.geodesic.gram_integral = g.at("gram_integral").get<bool>();
    r.geodesic.gram_min_poly = g.at("gram_min_poly").get<std::string>();
    r.verdict = j.at("verdict").get<std::string>();
    for (const auto& je : j.at("evidence"))
        r.evidence.push_back({je.at("rule").get<std::string>(), je.at("outcome").get<std::string>(),
                              je.at("detail").get<std::string>(), get_opt_str(je, "witness")});
    r.commensurability_key = j.at("commensurability_key").get<std::string>();
    const Json& s = j.at("symmetry");
    r.symmetry.kind = s.at("kind").get<std::string>();
    r.symmetry.sym_plus_order = get_opt_long(s, "sym_plus_order");
    r.symmetry.sym_order = get_opt_long(s, "sym_order");
    r.symmetry.hidden_count = get_opt_long(s, "hidden_count");
    r.symmetry.hidden_infinite = s.at("hidden_infinite").get<bool>();
    r.symmetry.cover_degree = get_opt_long(s, "cover_degree");
    r.symmetry.orbifold_volume_orientable = get_opt_str(s, "orbifold_volume_orientable");
    r.symmetry.orbifold_volume_full = get_opt_str(s, "orbifold_volume_full");
    r.symmetry.note = s.at("note").get<std::string>();
    r.hidden_upper_bound = get_opt_str(j, "hidden_upper_bound");
    return r;
}

std::string render_report_text(const ReportDocument& r) {
    std::ostringstream os;
    os << "fully augmented pretzel link complement  n=" << r.n << "  twists=" << r.twists << "\n";
    os << "tool " << r.tool_version << ", precision " << r.precision << " bits, " << r.digits
       << " printed digits\n\n";
    os << "cusp shapes:\n";
    for (const auto& c : r.cusp_shapes) {
        os << "  " << c.kind << ": ";
        if (c.numeric) os << *c.numeric;
        if (c.meridian_length)
            os << "meridian = " << *c.meridian_length << ", longitude >= " << *c.longitude_lower_bound;
        os << "\n";
    }
    os << "\ninvariant trace field:\n";
    os << "  min poly " << r.field.min_poly << ", degree " << r.field.degree << ", conductor "
       << r.field.conductor << ", stabilizer order " << r.field.stabilizer_order << "\n";
    os << "\nvolume = " << r.volume << "\n";
    os << "f(n) = vol/8n = " << r.orbifold_f << "\n";
    os << "\ngeodesic:\n";
    os << "  l(gamma+) = " << r.geodesic.perpendicular_length << "\n";
    os << "  l(gamma)  = " << r.geodesic.closed_length << "\n";
    os << "  Gram entry = "
       << (r.geodesic.gram_rational ? *r.geodesic.gram_rational
                                    : ("root of " + r.geodesic.gram_min_poly))
       << (r.geodesic.gram_integral ? " (algebraic integer)" : " (not an algebraic integer)") << "\n";
    os << "\narithmeticity: " << r.verdict << "\n";
    for (const auto& e : r.evidence) {
        os << "  [" << e.rule << " / " << e.outcome << "] " << e.detail;
        if (e.witness) os << "  witness: " << *e.witness;
        os << "\n";
    }
    os << "\ncommensurability class: " << r.commensurability_key << "\n";
    os << "\nsymmetries (" << r.symmetry.kind << "):\n";
    if (r.symmetry.sym_plus_order) os << "  |Sym+| = " << *r.symmetry.sym_plus_order << "\n";
    if (r.symmetry.sym_order) os << "  |Sym|  = " << *r.symmetry.sym_order << "\n";
    if (r.symmetry.hidden_infinite)
        os << "  hidden symmetries: infinite\n";
    else if (r.symmetry.hidden_count)
        os << "  hidden symmetries: " << *r.symmetry.hidden_count << "\n";
    else
        os << "  hidden symmetries: unknown\n";
    if (r.symmetry.cover_degree)
        os << "  cover degree over minimal orbifold: " << *r.symmetry.cover_degree << "\n";
    if (r.symmetry.orbifold_volume_orientable)
        os << "  minimal orientable orbifold volume: " << *r.symmetry.orbifold_volume_orientable << "\n";
    if (r.symmetry.orbifold_volume_full)
        os << "  minimal orbifold volume: " << *r.symmetry.orbifold_volume_full << "\n";
    if (!r.symmetry.note.empty()) os << "  note: " << r.symmetry.note << "\n";
    if (r.hidden_upper_bound) os << "\nhidden-symmetry upper bound vol/v0 = " << *r.hidden_upper_bound << "\n";
    return os.str();
}

namespace {

// Worker pool over independent n values; results are written into their
// own slots, so output order stays deterministic.
template <typename T, typename Fn>
std::vector<T> parallel_over_range(long count, Fn&& fn) {
    std::vector<T> out(count);
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), count);
    if (workers <= 1) {
        for (long i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    std::mutex err_mu;
    std::exception_ptr error;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::scoped_lock lock(err_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace

std::vector<FieldsRow> fields_table(long max_n, DescriptorCache* cache) {
    if (max_n < 3) throw std::invalid_argument("fields table requires max >= 3");
    std::vector<std::optional<TraceFieldDescriptor>> fresh(max_n - 2);
    auto rows = parallel_over_range<FieldsRow>(max_n - 2, [&](long i) {
        const long n = 3 + i;
        const TraceFieldDescriptor* hit = cache ? cache->lookup(n) : nullptr;
        if (hit) return FieldsRow{n, hit->degree, hit->min_poly.str(), hit->conductor};
        TraceFieldDescriptor d = build_trace_field(n);
        FieldsRow row{n, d.degree, d.min_poly.str(), d.conductor};
        fresh[i] = std::move(d);
        return row;
    });
    if (cache)  // single-writer: fold the freshly built descriptors in afterwards
        for (auto& d : fresh)
            if (d) cache->store(std::move(*d));
    return rows;
}

std::vector<ClassifyRow> classify_range(long lo, long hi, const std::optional<NeumannReidTable>& table,
                                        long prec, long digits) {
    if (lo < 3 || hi < lo) throw std::invalid_argument("classify range requires 3 <= A <= B");
    return parallel_over_range<ClassifyRow>(hi - lo + 1, [&](long i) {
        const long n = lo + i;
        ArithmeticityVerdict v = is_arithmetic(n, table, prec);
        std::string codes;
        for (const auto& e : v.evidence) {
            if (!codes.empty()) codes += ";";
            codes += std::string(rule_name(e.rule)) + ":" + outcome_name(e.outcome);
        }
        return ClassifyRow{n,
                           verdict_name(v.verdict),
                           codes,
                           commensurability_key_for(n),
                           volume(n, prec).str(digits),
                           orbifold_volume_f(n, prec).str(digits)};
    });
}

}  // namespace falc
