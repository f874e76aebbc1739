#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace falc {

enum class EdgeColor { plain, crossing };  // crossing-circle edges are the "green" ones

struct GraphEdge {
    int u, v;
    EdgeColor color;
};

/// Trivalent graph with a rotation system: each vertex carries the cyclic
/// (counterclockwise) order of its three incident darts, which encodes the
/// embedding in the sphere.  Edge e owns darts 2e (at u) and 2e+1 (at v).
/// Immutable after construction.
class EmbeddedGraph {
public:
    EmbeddedGraph(int vertex_count, std::vector<GraphEdge> edges,
                  std::vector<std::array<int, 3>> rotations);

    /// The crushtacean of the pretzel FAL with n crossing circles: a
    /// circular ladder with two n-cycles and n crossing-colored rungs,
    /// embedded as an annulus drawing.  Rung i is edge i.
    static EmbeddedGraph pretzel_crushtacean(long n);

    int vertex_count() const { return vertex_count_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    const std::vector<std::array<int, 3>>& rotations() const { return rotations_; }
    int dart_count() const { return static_cast<int>(edges_.size()) * 2; }

    int dart_vertex(int d) const { return dart_base_[d]; }
    int dart_edge(int d) const { return d / 2; }
    int dart_twin(int d) const { return d ^ 1; }
    /// sigma: next dart counterclockwise at the same vertex.
    int next_at_vertex(int d) const { return sigma_[d]; }
    int prev_at_vertex(int d) const { return sigma_inv_[d]; }

    /// Ids of the crossing-colored edges, in construction order.
    std::vector<int> green_edges() const;
    bool is_connected() const;

    /// Number of faces traced from the rotation system (Euler check).
    int face_count() const;

private:
    int vertex_count_;
    std::vector<GraphEdge> edges_;
    std::vector<std::array<int, 3>> rotations_;
    std::vector<int> dart_base_, sigma_, sigma_inv_;
};

enum class MapOrientation { preserving, reversing };

/// Involution of the embedded graph: a color-preserving automorphism of
/// order at most 2 that respects every vertex rotation (preserving, the
/// "rotational" case) or reverses every vertex rotation (reversing, the
/// "reflective" case).
struct GraphInvolution {
    std::vector<int> vertex_map;
    MapOrientation orientation;
};

struct InvolutionSearchResult {
    bool has_reflective = false;
    bool has_rotational = false;
    std::optional<GraphInvolution> reflective;
    std::optional<GraphInvolution> rotational;
};

/// Searches for involutions preserving the given crossing-colored edge and
/// swapping its endpoints.  The graph must be connected; anchoring the
/// search at the edge makes constraint propagation along the rotation
/// system deterministic, so each orientation class yields at most one
/// candidate to check.
InvolutionSearchResult find_involutions(const EmbeddedGraph& g, int edge_id);

/// All automorphisms of the embedded graph that preserve colors and
/// respect the rotation system globally (preserving or reversing).
struct MapAutomorphism {
    std::vector<int> vertex_map;
    MapOrientation orientation;
};
std::vector<MapAutomorphism> enumerate_map_automorphisms(const EmbeddedGraph& g);

/// Per-edge outcome of the commensurability criterion: an untwisted
/// crossing edge needs a reflective involution, a twisted one a rotational
/// involution.
struct EdgeInvolutionReport {
    int edge_id;
    bool twisted;
    bool has_reflective;
    bool has_rotational;
    bool satisfied;
    std::optional<GraphInvolution> witness;
};

struct CdwResult {
    bool commensurable_with_reflection_orbifold;
    std::vector<EdgeInvolutionReport> per_edge;
};

/// twists[i] (0 or 1) applies to the i-th crossing-colored edge in
/// green_edges() order; the vector length must match.
CdwResult cdw_criterion(const EmbeddedGraph& g, const std::vector<int>& twists);

/// Subforest of the graph given by edge ids, with one designated "middle"
/// edge per tree.
struct SpanningForest {
    std::vector<int> edge_ids;
    std::vector<int> middle_edges;
};

enum class ForestStatus {
    valid,
    not_spanning,
    cyclic,
    bad_middle_edges,
    no_tree_involution,
};

struct ForestReport {
    ForestStatus status;
    bool valid() const { return status == ForestStatus::valid; }
    std::string detail;
};

/// Checks that the forest spans every vertex, is acyclic, designates one
/// middle edge per tree, and that each tree admits an involution swapping
/// the endpoints of its middle edge (decided by comparing the two rooted
/// halves up to isomorphism).
ForestReport validate_forest(const EmbeddedGraph& g, const SpanningForest& f);

}  // namespace falc
