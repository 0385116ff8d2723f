#include "outerdraw/drawing.hpp"

#include <algorithm>

namespace outerdraw {

const char* edge_kind_name(edge_kind k) {
    switch (k) {
        case edge_kind::L: return "L";
        case edge_kind::S: return "S";
        case edge_kind::unit: return "unit";
    }
    return "?";
}

drawing drawing::without(const std::vector<edge>& drop) const {
    std::vector<edge> sorted = drop;
    std::sort(sorted.begin(), sorted.end());
    drawing out;
    out.n = n;
    out.pos = pos;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (std::binary_search(sorted.begin(), sorted.end(), edges[i])) continue;
        out.edges.push_back(edges[i]);
        out.kind.push_back(kind[i]);
    }
    return out;
}

}  // namespace outerdraw
