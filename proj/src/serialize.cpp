#include "falc/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace falc {

namespace {

std::vector<Rational> rationals_from_json(const Json& j) {
    std::vector<Rational> out;
    for (const auto& s : j) out.push_back(Rational::parse(s.get<std::string>()));
    return out;
}

Json rationals_to_json(const std::vector<Rational>& v) {
    Json j = Json::array();
    for (const auto& r : v) j.push_back(r.str());
    return j;
}

}  // namespace

Json polynomial_to_json(const Polynomial& p) { return rationals_to_json(p.coeffs()); }

Polynomial polynomial_from_json(const Json& j) { return Polynomial(rationals_from_json(j)); }

Json cyclo_to_json(const CycloElement& x) {
    return Json{{"modulus", x.modulus()}, {"coords", rationals_to_json(x.coords())}};
}

CycloElement cyclo_from_json(const Json& j) {
    return CycloElement::from_coords(j.at("modulus").get<long>(),
                                     rationals_from_json(j.at("coords")));
}

Json unit_subgroup_to_json(const UnitSubgroup& g) {
    return Json{{"modulus", g.modulus}, {"members", g.members}};
}

UnitSubgroup unit_subgroup_from_json(const Json& j) {
    UnitSubgroup g;
    g.modulus = j.at("modulus").get<long>();
    g.members = j.at("members").get<std::vector<long>>();
    if (!g.is_subgroup()) throw std::runtime_error("unit subgroup data is not a subgroup");
    return g;
}

Json descriptor_to_json(const TraceFieldDescriptor& d) {
    return Json{{"n", d.n},
                {"conductor", d.conductor},
                {"degree", d.degree},
                {"generator", cyclo_to_json(d.generator)},
                {"min_poly", polynomial_to_json(d.min_poly)},
                {"stabilizer", unit_subgroup_to_json(d.stab)}};
}

static CycloElement eval_poly_at(const Polynomial& p, const CycloElement& x) {
    CycloElement acc = CycloElement::zero(x.modulus());
    for (long k = p.degree(); k >= 0; --k)
        acc = acc * x + CycloElement::from_rational(x.modulus(), p.coeff(k));
    return acc;
}

TraceFieldDescriptor descriptor_from_json(const Json& j) {
    TraceFieldDescriptor d{j.at("n").get<long>(),
                           j.at("conductor").get<long>(),
                           cyclo_from_json(j.at("generator")),
                           polynomial_from_json(j.at("min_poly")),
                           j.at("degree").get<long>(),
                           unit_subgroup_from_json(j.at("stabilizer"))};
    if (d.conductor != trace_field_conductor(d.n))
        throw std::runtime_error("cached descriptor: conductor mismatch");
    if (d.generator.modulus() != d.conductor || d.min_poly.degree() != d.degree ||
        d.degree != euler_totient(d.n))
        throw std::runtime_error("cached descriptor: inconsistent fields");
    if (!eval_poly_at(d.min_poly, d.generator).is_zero())
        throw std::runtime_error("cached descriptor: generator does not satisfy the stored minimal polynomial");
    return d;
}

Json graph_to_json(const EmbeddedGraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges())
        edges.push_back(Json{{"u", e.u},
                             {"v", e.v},
                             {"color", e.color == EdgeColor::crossing ? "crossing" : "plain"}});
    Json rot = Json::array();
    for (const auto& r : g.rotations()) rot.push_back(std::vector<int>(r.begin(), r.end()));
    return Json{{"schema", "falc/crushtacean/1"},
                {"vertex_count", g.vertex_count()},
                {"edges", edges},
                {"rotations", rot}};
}

EmbeddedGraph graph_from_json(const Json& j) {
    if (j.value("schema", "") != "falc/crushtacean/1")
        throw std::runtime_error("graph file: unknown schema");
    std::vector<GraphEdge> edges;
    for (const auto& e : j.at("edges")) {
        const std::string color = e.at("color").get<std::string>();
        if (color != "crossing" && color != "plain")
            throw std::runtime_error("graph file: unknown edge color \"" + color + "\"");
        edges.push_back({e.at("u").get<int>(), e.at("v").get<int>(),
                         color == "crossing" ? EdgeColor::crossing : EdgeColor::plain});
    }
    std::vector<std::array<int, 3>> rot;
    for (const auto& r : j.at("rotations")) {
        if (r.size() != 3) throw std::runtime_error("graph file: rotations must list three darts");
        rot.push_back({r[0].get<int>(), r[1].get<int>(), r[2].get<int>()});
    }
    return EmbeddedGraph(j.at("vertex_count").get<int>(), std::move(edges), std::move(rot));
}

NeumannReidTable nr_table_from_json(const Json& j) {
    if (!j.is_array()) throw std::runtime_error("length table: expected a JSON list");
    NeumannReidTable t;
    const Real lo = Real::parse(kShortGeodesicCutoff);
    const Real hi = Real::parse(kAdmissibleLengthCap);
    for (const auto& e : j) {
        NrTableEntry entry{e.at("length").get<std::string>(), e.at("d").get<long>(),
                           e.at("source").get<std::string>()};
        if (entry.source.empty())
            throw std::runtime_error("length table: every entry needs a provenance source");
        const Real v = Real::parse(entry.length);
        if (!(v > lo) || !(v <= hi))
            throw std::runtime_error("length table: length " + entry.length + " outside (" +
                                     kShortGeodesicCutoff + ", " + kAdmissibleLengthCap + "]");
        t.entries.push_back(std::move(entry));
    }
    return t;
}

NeumannReidTable load_nr_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open length table file: " + path);
    Json j = Json::parse(in);
    return nr_table_from_json(j);
}

DescriptorCache DescriptorCache::load(const std::string& path) {
    DescriptorCache c;
    std::ifstream in(path);
    if (!in) return c;
    Json j = Json::parse(in);
    if (j.value("schema", "") != "falc/cache/1") throw std::runtime_error("cache file: unknown schema");
    for (const auto& e : j.at("entries")) c.store(descriptor_from_json(e));
    return c;
}

void DescriptorCache::save(const std::string& path) const {
    Json entries = Json::array();
    for (const auto& d : entries_) entries.push_back(descriptor_to_json(d));
    Json j{{"schema", "falc/cache/1"}, {"entries", entries}};
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write cache file: " + path);
    out << j.dump(1) << "\n";
}

const TraceFieldDescriptor* DescriptorCache::lookup(long n) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                               [](const TraceFieldDescriptor& d, long key) { return d.n < key; });
    return it != entries_.end() && it->n == n ? &*it : nullptr;
}

void DescriptorCache::store(TraceFieldDescriptor d) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), d.n,
                               [](const TraceFieldDescriptor& e, long key) { return e.n < key; });
    if (it != entries_.end() && it->n == d.n)
        *it = std::move(d);
    else
        entries_.insert(it, std::move(d));
}

}  // namespace falc
