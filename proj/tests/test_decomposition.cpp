#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "outerdraw/decomposition.hpp"
#include "outerdraw/generators.hpp"

using namespace outerdraw;

static int label_of(const chain& c, int v) {
    for (auto [x, l] : c.labels)
        if (x == v) return l;
    return -999;
}

// L/S split recomputed from the labels alone
static void check_label_rule(const chain& c) {
    for (auto e : c.short_edges) CHECK(std::abs(label_of(c, e.first) - label_of(c, e.second)) == 1);
    for (auto e : c.external_edges) CHECK(std::abs(label_of(c, e.first) - label_of(c, e.second)) == 2);
    CHECK(label_of(c, c.root_edge.first) == 0);
    CHECK(label_of(c, c.root_edge.second) == 0);
}

TEST_CASE("triangle: one chain, L is the root, S the other two") {
    auto m = triangulate(th::cycle(3));
    auto t = chain_decompose(m, {0, 1});
    REQUIRE(t.chains.size() == 1);
    CHECK(t.chains[0].triangles.size() == 1);
    CHECK(t.chains[0].s == 0);
    CHECK(t.chains[0].t == 0);
    CHECK(t.long_edges == std::vector<edge>{{0, 1}});
    CHECK(t.short_edges == std::vector<edge>{{0, 2}, {1, 2}});
    check_label_rule(t.chains[0]);
}

TEST_CASE("two triangles: labels 0 0 1 2, L gets the far outer edge") {
    // 0-1 root, triangle 0 1 2, then 1 2 3
    auto g = recognize_outerplanar(4, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {1, 2}});
    maximal_outerplanar_graph m{g, {}};
    auto t = chain_decompose(m, {0, 1});
    // the far L edge carries an empty chain
    REQUIRE(t.chains.size() == 2);
    CHECK(t.children[t.root].empty());
    const chain& c = t.chains[t.root];
    CHECK(c.triangles.size() == 2);
    CHECK(std::abs(c.t - c.s) == 1);
    std::multiset<int> labs;
    for (auto [v, l] : c.labels) labs.insert(std::abs(l));
    CHECK(labs == std::multiset<int>{0, 0, 1, 2});
    CHECK(t.long_edges.size() == 2);
    CHECK(t.short_edges.size() == 3);
    // the L edge other than the root joins labels 0 and 2
    for (auto e : c.external_edges) {
        std::set<int> ls{std::abs(label_of(c, e.first)), std::abs(label_of(c, e.second))};
        CHECK(ls == std::set<int>{0, 2});
    }
    check_label_rule(c);
}

TEST_CASE("fans longer than three triangles split into child chains") {
    // 5 triangles around apex 0
    std::vector<edge> es;
    for (int i = 1; i <= 6; ++i) es.push_back({0, i});
    for (int i = 1; i <= 5; ++i) es.push_back({i, i + 1});
    auto g = recognize_outerplanar(7, es);
    maximal_outerplanar_graph m{g, {}};
    auto t = chain_decompose(m, {0, 1});
    CHECK(t.chains.size() > 1);
    for (const auto& c : t.chains) {
        // only the vertex labelled 1 may see four triangles of its chain
        std::map<int, int> deg;
        for (int tr : c.triangles)
            for (int v : triangle_mesh(g).tris[tr]) ++deg[v];
        for (auto [v, k] : deg)
            if (label_of(c, v) != 1) CHECK(k <= 3);
    }
}

TEST_CASE("random graphs: triangles partitioned, one chain per L edge") {
    for (int n : {5, 12, 40, 150}) {
        for (std::uint64_t s = 0; s < 10; ++s) {
            auto g = gen_random_maximal_outerplanar(n, s);
            auto e = default_root_edge(g.graph);
            auto t = chain_decompose(g, e);
            std::vector<int> seen(n - 2, 0);
            for (const auto& c : t.chains) {
                for (int tr : c.triangles) ++seen[tr];
                if (!c.degenerate()) check_label_rule(c);
            }
            CHECK(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));
            CHECK(t.long_edges.size() == t.chains.size());
            CHECK(t.long_edges.size() + t.short_edges.size() == g.graph.edges.size());
        }
    }
}

TEST_CASE("maximal_chain from an outer edge starts at its triangle") {
    auto g = gen_random_maximal_outerplanar(20, 3);
    auto e = default_root_edge(g.graph);
    auto c = maximal_chain(g, e);
    CHECK(c.root_edge == e);
    CHECK(!c.triangles.empty());
    check_label_rule(c);
}
