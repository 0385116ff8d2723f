#pragma once

#include <string>
#include <vector>

#include "outerdraw/drawing.hpp"
#include "outerdraw/generators.hpp"

namespace outerdraw {

struct ratio_report {
    double ratio = 0;
    double min_len = 0, max_len = 0;
    edge min_edge, max_edge;
};

ratio_report edge_length_ratio(const drawing& d);

struct crossing {
    edge a, b;
    point at;  // an intersection point (approximate)
};

std::vector<crossing> find_crossings(const drawing& d);
// pairs of non-adjacent edges closer than eps (not crossing)
std::vector<std::pair<edge, edge>> near_degenerate(const drawing& d, double eps);

// one chain drawn in one strip
struct strip_fragment {
    point s0, s1;  // base, the root edge
    point d;       // unit direction
    std::vector<int> vertices;
    std::vector<point> pts;  // parallel to vertices
    std::vector<edge> edges;
    std::vector<edge> external;
    edge root;
};

struct strip_report {
    bool ok = true;
    std::vector<std::string> failures;  // "(i) ..." etc
};

strip_report check_strip_certificate(const strip_fragment& f, double eps_num = 1e-9,
                                     double guard = M_PI / 180);

struct embedding_report {
    bool ok = true;
    std::vector<int> misplaced;  // vertices outside their face
    std::vector<crossing> crossings;
};

embedding_report check_embedding_preserved(const drawing& d, const std::vector<nested_vertex>& fa);

struct packing_report {
    bool all_in_disk = false;
    double max_apex_dist = 0;
    double min_pendant_area = 0;
    double delta = 0;     // min edge - 1/2 after normalising
    double nu_bound = 0;  // 8 pi / sqrt(delta + delta^2), inf if delta <= 0
    int disjoint_pendants = 0;
    int k = 0;
};

packing_report packing_diagnostic(const drawing& d, int k);

}  // namespace outerdraw
