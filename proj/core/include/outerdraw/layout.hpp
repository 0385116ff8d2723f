#pragma once

#include <vector>

#include "outerdraw/decomposition.hpp"
#include "outerdraw/drawing.hpp"
#include "outerdraw/generators.hpp"
#include "outerdraw/validation.hpp"

namespace outerdraw {

struct layout_params {
    double leg_length = 0.75;   // lone triangles in draw_chain_in_strip
    double ray_rotation = 0;    // 0: chosen per chain
    double mu = 0.05;           // margin asked of short edges when affordable
    double mu_floor = 1e-6;     // margin below which room is no longer traded
    double eps_num = 1e-9;
    double guard = M_PI / 180;
    double theta_max = 55 * M_PI / 180;  // largest chain angle picked by draw_maximal
};

void check_params(const layout_params& p);

struct segment {
    point a, b;
};

struct chain_fragment {
    std::vector<std::pair<int, point>> positions;           // every chain vertex
    std::vector<std::pair<edge, segment>> external_segments;
    strip_fragment fragment;
};

// draws one chain in Strip(s, d); s.a is root_edge.first, s.b is root_edge.second
chain_fragment draw_chain_in_strip(const triangle_mesh& mesh, const chain& c, segment s, point d,
                                   const layout_params& p = {});

struct maximal_layout {
    drawing d;
    std::vector<strip_fragment> fragments;
    std::vector<int> chain_of_fragment;
};

drawing draw_maximal(const maximal_outerplanar_graph& g, edge e_prime, const layout_params& p = {});
maximal_layout draw_maximal_traced(const maximal_outerplanar_graph& g, edge e_prime,
                                   const layout_params& p = {}, bool keep_fragments = true);

struct wedge {
    segment base;   // base.a takes e.first's role as u1
    point dir1, dir2;  // rays at base.a and base.b
    double angle() const;
};

// region is on the left of e.first -> e.second; e must be an outer edge
drawing draw_bipartite_in_wedge(const quadrangulated_graph& g, edge e, const wedge& w,
                                const layout_params& p = {});

struct pipeline_result {
    drawing d;           // reported edges only
    drawing augmented;   // with added edges
    bool bipartite = false;
    std::vector<strip_fragment> fragments;  // one per chain, maximal case only
};

pipeline_result draw_pipeline(const outerplanar_graph& g, const layout_params& p = {});
drawing draw(const outerplanar_graph& g, const layout_params& p = {});

drawing naive_nested_draw(const embedded_graph& g, const layout_params& p = {});

}  // namespace outerdraw
