#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "falc/crushtacean.hpp"
#include "falc/serialize.hpp"

using namespace falc;

namespace {

// brute-force graph isomorphism between two small simple graphs
bool isomorphic(int V, const std::set<std::pair<int, int>>& a, const std::set<std::pair<int, int>>& b) {
    std::vector<int> perm(V);
    for (int i = 0; i < V; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (const auto& [u, v] : a) {
            auto key = std::minmax(perm[u], perm[v]);
            if (!b.count({key.first, key.second})) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::set<std::pair<int, int>> edge_set(const EmbeddedGraph& g) {
    std::set<std::pair<int, int>> s;
    for (const auto& e : g.edges()) s.insert(std::minmax(e.u, e.v));
    return s;
}

// involution of the tree swapping the middle edge endpoints, by exhaustive
// search over vertex maps of the tree (oracle for the canonical-form check)
bool tree_involution_oracle(const EmbeddedGraph& g, const std::vector<int>& tree_edges, int middle) {
    std::set<int> verts;
    std::map<int, std::vector<int>> adj;
    for (int e : tree_edges) {
        verts.insert(g.edges()[e].u);
        verts.insert(g.edges()[e].v);
        adj[g.edges()[e].u].push_back(g.edges()[e].v);
        adj[g.edges()[e].v].push_back(g.edges()[e].u);
    }
    std::vector<int> vs(verts.begin(), verts.end());
    std::map<int, int> idx;
    for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<int>(i);
    const int a = g.edges()[middle].u, b = g.edges()[middle].v;
    const int V = static_cast<int>(vs.size());
    std::vector<int> vmap(V, -1);
    vmap[idx[a]] = idx[b];
    vmap[idx[b]] = idx[a];
    bool found = false;
    std::function<void(int)> rec = [&](int from) {
        if (found) return;
        int next = from;
        while (next < V && vmap[next] != -1) ++next;
        if (next == V) {
            // adjacency preserved?
            for (const auto& [v, ns] : adj)
                for (int w : ns) {
                    const auto& img = adj[vs[vmap[idx[v]]]];
                    if (std::find(img.begin(), img.end(), vs[vmap[idx[w]]]) == img.end()) return;
                }
            found = true;
            return;
        }
        for (int w = next; w < V; ++w) {
            if (w != next && vmap[w] != -1) continue;
            vmap[next] = w;
            vmap[w] = next;
            rec(next + 1);
            vmap[next] = -1;
            if (w != next) vmap[w] = -1;
        }
    };
    rec(0);
    return found;
}

}  // namespace

TEST_CASE("pretzel crushtacean structure") {
    auto g3 = EmbeddedGraph::pretzel_crushtacean(3);
    CHECK(g3.vertex_count() == 6);
    CHECK(g3.edges().size() == 9);
    CHECK(g3.green_edges().size() == 3);
    CHECK(g3.is_connected());
    CHECK(g3.face_count() == 5);  // n + 2

    CHECK_THROWS_AS(EmbeddedGraph::pretzel_crushtacean(2), std::invalid_argument);

    // n = 4 gives the cube graph skeleton
    auto g4 = EmbeddedGraph::pretzel_crushtacean(4);
    std::set<std::pair<int, int>> cube{{0, 1}, {1, 2}, {2, 3}, {0, 3},
                                       {4, 5}, {5, 6}, {6, 7}, {4, 7},
                                       {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    CHECK(isomorphic(8, edge_set(g4), cube));
}

TEST_CASE("graph construction validation") {
    // rotations must agree with the edge endpoints
    std::vector<GraphEdge> edges{{0, 1, EdgeColor::plain}, {0, 1, EdgeColor::plain},
                                 {0, 1, EdgeColor::crossing}};
    std::vector<std::array<int, 3>> bad_rot{{0, 2, 4}, {1, 3, 5}};
    CHECK_NOTHROW(EmbeddedGraph(2, edges, bad_rot));  // the theta graph is a valid map
    std::vector<std::array<int, 3>> wrong{{1, 2, 4}, {0, 3, 5}};
    CHECK_THROWS_AS(EmbeddedGraph(2, edges, wrong), std::invalid_argument);
    CHECK_THROWS_AS(EmbeddedGraph(3, edges, bad_rot), std::invalid_argument);  // not trivalent
}

TEST_CASE("involution search on pretzels") {
    for (long n : {3L, 5L, 8L}) {
        auto g = EmbeddedGraph::pretzel_crushtacean(n);
        for (int e : g.green_edges()) {
            auto r = find_involutions(g, e);
            CHECK(r.has_reflective);
            CHECK(r.has_rotational);
            // witnesses swap the rung endpoints and square to the identity
            for (const auto& w : {r.reflective, r.rotational}) {
                REQUIRE(w.has_value());
                const auto& vm = w->vertex_map;
                CHECK(vm[g.edges()[e].u] == g.edges()[e].v);
                CHECK(vm[g.edges()[e].v] == g.edges()[e].u);
                for (int v = 0; v < g.vertex_count(); ++v) CHECK(vm[vm[v]] == v);
            }
        }
        // non-green edges are rejected
        CHECK_THROWS_AS(find_involutions(g, static_cast<int>(n)), std::invalid_argument);
    }
}

TEST_CASE("criterion on pretzels") {
    auto g = EmbeddedGraph::pretzel_crushtacean(6);
    for (long mask = 0; mask < 64; ++mask) {
        std::vector<int> eps(6);
        for (int i = 0; i < 6; ++i) eps[i] = static_cast<int>((mask >> i) & 1);
        auto r = cdw_criterion(g, eps);
        CHECK(r.commensurable_with_reflection_orbifold);
        CHECK(r.per_edge.size() == 6);
        for (const auto& pe : r.per_edge) {
            CHECK(pe.satisfied);
            CHECK(pe.witness.has_value());
        }
    }
    CHECK_THROWS_AS(cdw_criterion(g, std::vector<int>(5, 0)), std::invalid_argument);
    CHECK_THROWS_AS(cdw_criterion(g, std::vector<int>(6, 2)), std::invalid_argument);
}

TEST_CASE("automorphism count") {
    for (long n : {3L, 4L, 5L, 6L}) {
        auto g = EmbeddedGraph::pretzel_crushtacean(n);
        CHECK(static_cast<long>(enumerate_map_automorphisms(g).size()) == 4 * n);
    }
}

TEST_CASE("forest validation") {
    auto g = EmbeddedGraph::pretzel_crushtacean(5);

    SpanningForest rungs{{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}};
    CHECK(validate_forest(g, rungs).valid());

    SpanningForest path{{5, 6, 7, 8, 0, 10, 11, 12, 13}, {0}};
    CHECK(validate_forest(g, path).valid());

    // star whose designated middle edge is a spoke: center and leaf cannot swap
    auto g3 = EmbeddedGraph::pretzel_crushtacean(3);
    // star at u0: rung (u0,w0) and outer edges (u0,u1), (u2,u0); plus inner (w1,w2)
    SpanningForest star{{0, 3, 5, 7}, {3, 7}};
    CHECK(validate_forest(g3, star).status == ForestStatus::no_tree_involution);

    SpanningForest nonspan{{0, 1, 2, 3}, {0, 1, 2, 3}};
    CHECK(validate_forest(g, nonspan).status == ForestStatus::not_spanning);

    SpanningForest cyc{{5, 6, 7, 8, 9}, {5}};
    CHECK(validate_forest(g, cyc).status == ForestStatus::cyclic);

    SpanningForest off_middle{{5, 6, 7, 8, 0, 10, 11, 12, 13}, {6}};
    CHECK(validate_forest(g, off_middle).status == ForestStatus::no_tree_involution);

    SpanningForest two_middles{{0, 1, 2, 3, 4}, {0, 0, 1, 2, 3}};
    CHECK(validate_forest(g, two_middles).status == ForestStatus::bad_middle_edges);

    CHECK_THROWS_AS(validate_forest(g, SpanningForest{{99}, {99}}), std::invalid_argument);
}

TEST_CASE("forest involution matches exhaustive oracle") {
    auto g = EmbeddedGraph::pretzel_crushtacean(4);
    // all spanning trees would be overkill; sample a few subtrees directly
    std::vector<std::vector<int>> trees{
        {0, 4, 8},      // path w0-u0-u1-w1 (rung0, outer0, rung1)
        {4, 5, 6},      // path along the outer cycle
        {0, 4, 5},      // w0-u0-u1-u2
    };
    for (const auto& t : trees) {
        // every tree edge as middle: compare validator against brute force
        for (int middle : t) {
            SpanningForest f{t, {middle}};
            // restrict to the tree's own vertex set by ignoring spanning issues:
            // craft a forest covering the rest with rungs when possible
            std::set<int> used;
            for (int e : t) {
                used.insert(g.edges()[e].u);
                used.insert(g.edges()[e].v);
            }
            std::vector<int> edges = t;
            std::vector<int> middles{middle};
            for (int r = 0; r < 4; ++r) {
                const auto& e = g.edges()[r];
                if (!used.count(e.u) && !used.count(e.v)) {
                    edges.push_back(r);
                    middles.push_back(r);
                    used.insert(e.u);
                    used.insert(e.v);
                }
            }
            if (used.size() != static_cast<std::size_t>(g.vertex_count())) continue;
            const bool got = validate_forest(g, SpanningForest{edges, middles}).valid();
            const bool want = tree_involution_oracle(g, t, middle);
            CHECK(got == want);
        }
    }
}

TEST_CASE("graph json") {
    auto g = EmbeddedGraph::pretzel_crushtacean(4);
    auto j = graph_to_json(g);
    auto h = graph_from_json(j);
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.rotations() == g.rotations());

    auto bad = j;
    bad["edges"][0]["color"] = "chartreuse";
    CHECK_THROWS(graph_from_json(bad));
    auto bad2 = j;
    bad2["schema"] = "nope";
    CHECK_THROWS(graph_from_json(bad2));
}
