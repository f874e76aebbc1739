#include "falc/crushtacean.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace falc {

EmbeddedGraph::EmbeddedGraph(int vertex_count, std::vector<GraphEdge> edges,
                             std::vector<std::array<int, 3>> rotations)
    : vertex_count_(vertex_count), edges_(std::move(edges)), rotations_(std::move(rotations)) {
    if (vertex_count_ <= 0) throw std::invalid_argument("EmbeddedGraph: empty vertex set");
    if (static_cast<int>(rotations_.size()) != vertex_count_)
        throw std::invalid_argument("EmbeddedGraph: one rotation is required per vertex");
    if (edges_.size() * 2 != static_cast<std::size_t>(vertex_count_) * 3)
        throw std::invalid_argument("EmbeddedGraph: graph is not trivalent");

    const int darts = dart_count();
    dart_base_.assign(darts, -1);
    sigma_.assign(darts, -1);
    sigma_inv_.assign(darts, -1);
    for (int v = 0; v < vertex_count_; ++v) {
        for (int k = 0; k < 3; ++k) {
            const int d = rotations_[v][k];
            if (d < 0 || d >= darts) throw std::invalid_argument("EmbeddedGraph: dart id out of range");
            if (dart_base_[d] != -1) throw std::invalid_argument("EmbeddedGraph: dart appears twice");
            dart_base_[d] = v;
            sigma_[d] = rotations_[v][(k + 1) % 3];
            sigma_inv_[d] = rotations_[v][(k + 2) % 3];
        }
    }
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const auto& ed = edges_[e];
        if (ed.u < 0 || ed.u >= vertex_count_ || ed.v < 0 || ed.v >= vertex_count_)
            throw std::invalid_argument("EmbeddedGraph: edge endpoint out of range");
        if (dart_base_[2 * e] != ed.u || dart_base_[2 * e + 1] != ed.v)
            throw std::invalid_argument("EmbeddedGraph: rotations disagree with edge endpoints");
    }
}

EmbeddedGraph EmbeddedGraph::pretzel_crushtacean(long n) {
    if (n < 3) throw std::invalid_argument("pretzel crushtacean requires n >= 3");
    const int nn = static_cast<int>(n);
    std::vector<GraphEdge> edges;
    edges.reserve(3 * nn);
    for (int i = 0; i < nn; ++i) edges.push_back({i, nn + i, EdgeColor::crossing});  // rungs
    for (int i = 0; i < nn; ++i) edges.push_back({i, (i + 1) % nn, EdgeColor::plain});  // outer cycle
    for (int i = 0; i < nn; ++i)
        edges.push_back({nn + i, nn + (i + 1) % nn, EdgeColor::plain});  // inner cycle

    auto outer_dart = [nn](int i, bool at_source) { return 2 * (nn + i) + (at_source ? 0 : 1); };
    auto inner_dart = [nn](int i, bool at_source) { return 2 * (2 * nn + i) + (at_source ? 0 : 1); };

    std::vector<std::array<int, 3>> rot(2 * nn);
    for (int i = 0; i < nn; ++i) {
        const int prev = (i + nn - 1) % nn;
        // outer vertex: toward next, down the rung, toward previous
        rot[i] = {outer_dart(i, true), 2 * i, outer_dart(prev, false)};
        // inner vertex: toward next, toward previous, up the rung
        rot[nn + i] = {inner_dart(i, true), inner_dart(prev, false), 2 * i + 1};
    }
    return EmbeddedGraph(2 * nn, std::move(edges), std::move(rot));
}

std::vector<int> EmbeddedGraph::green_edges() const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
        if (edges_[e].color == EdgeColor::crossing) out.push_back(e);
    return out;
}

bool EmbeddedGraph::is_connected() const {
    std::vector<char> seen(vertex_count_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int d : rotations_[v]) {
            const int w = dart_base_[dart_twin(d)];
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vertex_count_;
}

int EmbeddedGraph::face_count() const {
    std::vector<char> seen(dart_count(), 0);
    int faces = 0;
    for (int d0 = 0; d0 < dart_count(); ++d0) {
        if (seen[d0]) continue;
        ++faces;
        int d = d0;
        do {
            seen[d] = 1;
            d = next_at_vertex(dart_twin(d));
        } while (d != d0);
    }
    return faces;
}

namespace {

// Extends the seed dart assignment over the whole connected graph using
// twin- and rotation-propagation, then validates the result.  Returns the
// vertex map when the extension is a color-preserving involution.
std::optional<std::vector<int>> propagate_involution(const EmbeddedGraph& g, int seed_from,
                                                     int seed_to, MapOrientation mode) {
    const int darts = g.dart_count();
    std::vector<int> img(darts, -1);
    std::vector<int> queue;
    auto assign = [&](int d, int to) {
        if (img[d] == -1) {
            img[d] = to;
            queue.push_back(d);
            return true;
        }
        return img[d] == to;
    };
    if (!assign(seed_from, seed_to)) return std::nullopt;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int d = queue[qi];
        const int t = img[d];
        if (!assign(g.dart_twin(d), g.dart_twin(t))) return std::nullopt;
        const int nsrc = g.next_at_vertex(d);
        const int ndst = mode == MapOrientation::preserving ? g.next_at_vertex(t) : g.prev_at_vertex(t);
        if (!assign(nsrc, ndst)) return std::nullopt;
    }
    for (int d = 0; d < darts; ++d) {
        if (img[d] == -1) return std::nullopt;  // graph not connected
        if (img[img[d]] != d) return std::nullopt;
        if (g.edges()[g.dart_edge(d)].color != g.edges()[g.dart_edge(img[d])].color)
            return std::nullopt;
    }
    std::vector<int> vmap(g.vertex_count(), -1);
    for (int d = 0; d < darts; ++d) {
        const int v = g.dart_vertex(d);
        const int w = g.dart_vertex(img[d]);
        if (vmap[v] == -1)
            vmap[v] = w;
        else if (vmap[v] != w)
            return std::nullopt;
    }
    return vmap;
}

}  // namespace

InvolutionSearchResult find_involutions(const EmbeddedGraph& g, int edge_id) {
    if (edge_id < 0 || edge_id >= static_cast<int>(g.edges().size()))
        throw std::invalid_argument("find_involutions: edge id out of range");
    const GraphEdge& e = g.edges()[edge_id];
    if (e.color != EdgeColor::crossing)
        throw std::invalid_argument("find_involutions: edge is not a crossing-circle edge");
    if (e.u == e.v) throw std::invalid_argument("find_involutions: edge is a loop");
    if (!g.is_connected()) throw std::invalid_argument("find_involutions: graph must be connected");

    InvolutionSearchResult out;
    // The involution must send the dart of e at u to the dart at v, so the
    // whole map is forced once the orientation behaviour is chosen.
    if (auto vm = propagate_involution(g, 2 * edge_id, 2 * edge_id + 1, MapOrientation::reversing)) {
        out.has_reflective = true;
        out.reflective = GraphInvolution{std::move(*vm), MapOrientation::reversing};
    }
    if (auto vm = propagate_involution(g, 2 * edge_id, 2 * edge_id + 1, MapOrientation::preserving)) {
        out.has_rotational = true;
        out.rotational = GraphInvolution{std::move(*vm), MapOrientation::preserving};
    }
    return out;
}

std::vector<MapAutomorphism> enumerate_map_automorphisms(const EmbeddedGraph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("enumerate_map_automorphisms: graph must be connected");
    std::vector<MapAutomorphism> out;
    const int darts = g.dart_count();
    for (MapOrientation mode : {MapOrientation::preserving, MapOrientation::reversing}) {
        for (int target = 0; target < darts; ++target) {
            // reuse the propagation machinery without the involution check
            std::vector<int> img(darts, -1);
            std::vector<int> queue;
            bool ok = true;
            auto assign = [&](int d, int to) {
                if (img[d] == -1) {
                    img[d] = to;
                    queue.push_back(d);
                    return true;
                }
                return img[d] == to;
            };
            assign(0, target);
            for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
                const int d = queue[qi];
                const int t = img[d];
                ok = assign(g.dart_twin(d), g.dart_twin(t)) &&
                     assign(g.next_at_vertex(d), mode == MapOrientation::preserving
                                                     ? g.next_at_vertex(t)
                                                     : g.prev_at_vertex(t));
            }
            if (!ok) continue;
            // bijectivity and colors
            std::vector<char> hit(darts, 0);
            for (int d = 0; d < darts && ok; ++d) {
                ok = img[d] != -1 && !hit[img[d]] &&
                     g.edges()[g.dart_edge(d)].color == g.edges()[g.dart_edge(img[d])].color;
                if (ok) hit[img[d]] = 1;
            }
            if (!ok) continue;
            std::vector<int> vmap(g.vertex_count(), -1);
            for (int d = 0; d < darts && ok; ++d) {
                const int v = g.dart_vertex(d);
                const int w = g.dart_vertex(img[d]);
                if (vmap[v] == -1)
                    vmap[v] = w;
                else
                    ok = vmap[v] == w;
            }
            if (ok) out.push_back(MapAutomorphism{std::move(vmap), mode});
        }
    }
    // distinct dart maps can only repeat a vertex map on multigraphs
    std::sort(out.begin(), out.end(), [](const MapAutomorphism& a, const MapAutomorphism& b) {
        return std::tie(a.vertex_map, a.orientation) < std::tie(b.vertex_map, b.orientation);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const MapAutomorphism& a, const MapAutomorphism& b) {
                              return a.vertex_map == b.vertex_map && a.orientation == b.orientation;
                          }),
              out.end());
    return out;
}

CdwResult cdw_criterion(const EmbeddedGraph& g, const std::vector<int>& twists) {
    const auto greens = g.green_edges();
    if (twists.size() != greens.size())
        throw std::invalid_argument("cdw_criterion: twist vector length must match the crossing edge count");
    for (int t : twists)
        if (t != 0 && t != 1) throw std::invalid_argument("cdw_criterion: twists must be 0 or 1");

    CdwResult out{true, {}};
    for (std::size_t i = 0; i < greens.size(); ++i) {
        auto found = find_involutions(g, greens[i]);
        EdgeInvolutionReport rep;
        rep.edge_id = greens[i];
        rep.twisted = twists[i] == 1;
        rep.has_reflective = found.has_reflective;
        rep.has_rotational = found.has_rotational;
        rep.satisfied = rep.twisted ? found.has_rotational : found.has_reflective;
        rep.witness = rep.twisted ? std::move(found.rotational) : std::move(found.reflective);
        out.commensurable_with_reflection_orbifold &= rep.satisfied;
        out.per_edge.push_back(std::move(rep));
    }
    return out;
}

namespace {

// Canonical form of the rooted tree hanging from `v` away from `parent`,
// within the forest given by adjacency lists.
std::string rooted_canon(const std::vector<std::vector<std::pair<int, int>>>& adj, int v, int parent_edge) {
    std::vector<std::string> kids;
    for (auto [w, e] : adj[v])
        if (e != parent_edge) kids.push_back(rooted_canon(adj, w, e));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ")";
    return s;
}

}  // namespace

ForestReport validate_forest(const EmbeddedGraph& g, const SpanningForest& f) {
    for (int e : f.edge_ids)
        if (e < 0 || e >= static_cast<int>(g.edges().size()))
            throw std::invalid_argument("validate_forest: edge id out of range");

    // cycle detection via union-find
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int e : f.edge_ids) {
        const int a = find(g.edges()[e].u), b = find(g.edges()[e].v);
        if (a == b) return {ForestStatus::cyclic, "forest edges contain a cycle"};
        parent[a] = b;
    }

    std::vector<char> covered(g.vertex_count(), 0);
    for (int e : f.edge_ids) covered[g.edges()[e].u] = covered[g.edges()[e].v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!covered[v]) return {ForestStatus::not_spanning, "vertex " + std::to_string(v) + " is not spanned"};

    // trees = components of the forest; exactly one middle edge each
    std::map<int, int> tree_middle;  // root -> middle edge
    std::vector<char> in_forest(g.edges().size(), 0);
    for (int e : f.edge_ids) in_forest[e] = 1;
    for (int e : f.middle_edges) {
        if (e < 0 || e >= static_cast<int>(g.edges().size()) || !in_forest[e])
            return {ForestStatus::bad_middle_edges, "middle edge " + std::to_string(e) + " is not a forest edge"};
        const int root = find(g.edges()[e].u);
        if (tree_middle.count(root))
            return {ForestStatus::bad_middle_edges, "a tree has two middle edges"};
        tree_middle[root] = e;
    }
    std::map<int, int> roots;  // root -> any vertex, to count trees
    for (int v = 0; v < g.vertex_count(); ++v) roots.emplace(find(v), v);
    if (roots.size() != tree_middle.size())
        return {ForestStatus::bad_middle_edges, "each tree needs exactly one middle edge"};

    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
    for (int e : f.edge_ids) {
        adj[g.edges()[e].u].push_back({g.edges()[e].v, e});
        adj[g.edges()[e].v].push_back({g.edges()[e].u, e});
    }
    for (auto [root, e] : tree_middle) {
        (void)root;
        // an involution of the tree swapping the middle edge endpoints
        // exists iff the two rooted halves are isomorphic
        const int a = g.edges()[e].u, b = g.edges()[e].v;
        if (rooted_canon(adj, a, e) != rooted_canon(adj, b, e))
            return {ForestStatus::no_tree_involution,
                    "tree with middle edge " + std::to_string(e) + " is not edge-symmetric"};
    }
    return {ForestStatus::valid, ""};
}

}  // namespace falc
