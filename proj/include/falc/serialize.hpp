#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "falc/classify.hpp"
#include "falc/crushtacean.hpp"
#include "falc/cyclotomic.hpp"
#include "falc/polynomial.hpp"
#include "falc/tracefield.hpp"

namespace falc {

using Json = nlohmann::ordered_json;

// Exact values are serialized as decimal strings ("p" or "p/q"), never as
// floating point.

Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json cyclo_to_json(const CycloElement& x);
CycloElement cyclo_from_json(const Json& j);

Json unit_subgroup_to_json(const UnitSubgroup& g);
UnitSubgroup unit_subgroup_from_json(const Json& j);

Json descriptor_to_json(const TraceFieldDescriptor& d);
/// Re-verifies the stored data: the generator must satisfy the stored
/// minimal polynomial exactly and the invariants must hold.  Throws
/// std::runtime_error otherwise.
TraceFieldDescriptor descriptor_from_json(const Json& j);

/// Embedded graph file format, schema "falc/crushtacean/1":
/// { "schema": ..., "vertex_count": V,
///   "edges": [{"u":0,"v":1,"color":"crossing"|"plain"}, ...],
///   "rotations": [[d0,d1,d2], ...] }   (dart 2e at u of edge e, 2e+1 at v)
Json graph_to_json(const EmbeddedGraph& g);
EmbeddedGraph graph_from_json(const Json& j);

/// Neumann-Reid style admissible length table: a JSON list of
/// {"length": "1.087070...", "d": 1, "source": "..."}.  Every length must
/// lie in (0.862554627, 1.9248473002]; the load is refused otherwise.
NeumannReidTable nr_table_from_json(const Json& j);
NeumannReidTable load_nr_table_file(const std::string& path);

/// On-disk cache of trace-field descriptors keyed by n, schema
/// "falc/cache/1".  Loading re-verifies every entry.
class DescriptorCache {
public:
    static DescriptorCache load(const std::string& path);  // missing file -> empty cache
    void save(const std::string& path) const;

    const TraceFieldDescriptor* lookup(long n) const;
    void store(TraceFieldDescriptor d);
    std::size_t size() const { return entries_.size(); }

private:
    std::vector<TraceFieldDescriptor> entries_;  // sorted by n
};

}  // namespace falc
