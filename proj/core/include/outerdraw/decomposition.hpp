#pragma once

#include <array>
#include <vector>

#include "outerdraw/graph.hpp"

namespace outerdraw {

// triangles of a maximal outerplanar graph with edge -> triangle incidence
struct triangle_mesh {
    int n = 0;
    std::vector<std::array<int, 3>> tris;
    std::vector<edge> edges;                    // sorted
    std::vector<std::array<int, 2>> edge_tris;  // -1 when absent

    explicit triangle_mesh(const outerplanar_graph& g);
    int edge_id(int u, int v) const;  // -1 if not an edge
    int third(int tri, int u, int v) const;
    // triangle across edge uv other than `from`, -1 if none
    int across(int u, int v, int from) const;
};

struct chain {
    std::vector<int> triangles;  // T_s .. T_t
    int s = 0, t = 0;
    edge root_edge{-1, -1};
    std::vector<int> plus_seq;   // v0+, v1, v2, ...
    std::vector<int> minus_seq;  // v1, v0-, v-1, ...
    std::vector<std::pair<int, int>> labels;  // (vertex, label)
    std::vector<edge> external_edges;          // L-edges except the root
    std::vector<edge> short_edges;

    bool degenerate() const { return triangles.empty(); }
    int v0_plus() const { return plus_seq.empty() ? -1 : plus_seq[0]; }
    int v0_minus() const { return minus_seq.size() < 2 ? -1 : minus_seq[1]; }
    int v1() const { return plus_seq.size() < 2 ? -1 : plus_seq[1]; }
};

struct chain_tree {
    std::vector<chain> chains;              // chains[0] is the root
    std::vector<int> parent;
    std::vector<std::vector<int>> children;  // non-degenerate children only
    int root = 0;
    std::vector<edge> long_edges;   // L, sorted
    std::vector<edge> short_edges;  // S, sorted
};

// grow the chain whose T_0 is `tri0` containing root edge ab.
// minus_hint >= 0 forces that endpoint to be v0-; otherwise the tie rule applies
chain grow_chain(const triangle_mesh& mesh, int a, int b, int tri0, int minus_hint = -1);

chain maximal_chain(const maximal_outerplanar_graph& g, edge e);
chain_tree chain_decompose(const maximal_outerplanar_graph& g, edge e_prime);

}  // namespace outerdraw
