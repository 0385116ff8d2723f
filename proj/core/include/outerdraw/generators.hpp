#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "outerdraw/graph.hpp"

namespace outerdraw {

struct nested_vertex {
    int v = -1;
    edge e;                    // the distinguished edge it was created for
    std::array<int, 3> face;  // triangle it must lie in
    int level = 0;
};

struct embedded_graph {
    maximal_outerplanar_graph graph;  // abstract graph
    int levels = 0;
    std::vector<nested_vertex> face_assignment;
    std::vector<edge> distinguished_edges;  // of the last level
};

maximal_outerplanar_graph gen_fan_pendant(int k);
embedded_graph gen_nested_family(int n, int max_n = 20);
maximal_outerplanar_graph gen_random_maximal_outerplanar(int n, std::uint64_t seed);
// even cycle with random bipartite chords
outerplanar_graph gen_random_bipartite_outerplanar(int n, std::uint64_t seed);

double min_triangle_area(double delta);
long long required_k(double epsilon);

}  // namespace outerdraw
