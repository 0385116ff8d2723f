#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace outerdraw {

using edge = std::pair<int, int>;  // always u < v

inline edge make_edge(int u, int v) { return u < v ? edge{u, v} : edge{v, u}; }

struct outerplanar_graph {
    int n = 0;
    std::vector<edge> edges;               // sorted
    std::vector<int> outer_cycle;          // starts at 0
    std::vector<std::vector<int>> rotation;  // ccw neighbour order
    std::vector<int> pos;                  // index of vertex in outer_cycle

    bool has_edge(int u, int v) const;
    bool is_outer_edge(int u, int v) const;
    // inner faces, each ccw and starting at its lowest id
    std::vector<std::vector<int>> inner_faces() const;
};

struct maximal_outerplanar_graph {
    outerplanar_graph graph;
    std::vector<edge> added_edges;
};

struct quadrangulated_graph {
    outerplanar_graph graph;
    std::vector<edge> added_edges;
    std::vector<int> coloring;
};

struct dual_tree {
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::pair<int, int>> adjacency;
    std::vector<edge> shared_edge;  // parallel to adjacency
};

// outer_cycle may be empty; if given it is checked against the computed one
outerplanar_graph recognize_outerplanar(int n, const std::vector<edge>& edges,
                                        const std::vector<int>& outer_cycle = {});

// builds the embedding for a known outer cycle, no checks
outerplanar_graph embed_with_cycle(int n, std::vector<edge> edges, std::vector<int> cycle);

maximal_outerplanar_graph triangulate(const outerplanar_graph& g);
std::vector<int> bipartition(const outerplanar_graph& g);
quadrangulated_graph quadrangulate_bipartite(const outerplanar_graph& g,
                                             const std::vector<int>& coloring);
dual_tree make_dual_tree(const maximal_outerplanar_graph& g);

// lowest lexicographic outer edge
edge default_root_edge(const outerplanar_graph& g);

}  // namespace outerdraw
