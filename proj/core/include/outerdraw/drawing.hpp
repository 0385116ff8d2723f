#pragma once

#include <vector>

#include "outerdraw/geometry.hpp"
#include "outerdraw/graph.hpp"

namespace outerdraw {

enum class edge_kind { L, S, unit };

const char* edge_kind_name(edge_kind k);

struct drawing {
    int n = 0;
    std::vector<point> pos;
    std::vector<edge> edges;      // sorted
    std::vector<edge_kind> kind;  // parallel to edges

    double length(size_t i) const { return dist(pos[edges[i].first], pos[edges[i].second]); }
    // keeps positions, drops the listed edges
    drawing without(const std::vector<edge>& drop) const;
};

}  // namespace outerdraw
