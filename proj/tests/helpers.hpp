#pragma once
#include <numeric>
#include <vector>

#include "outerdraw/graph.hpp"

namespace th {

inline std::vector<outerdraw::edge> cycle_edges(int n) {
    std::vector<outerdraw::edge> es;
    for (int i = 0; i < n; ++i) es.push_back(outerdraw::make_edge(i, (i + 1) % n));
    return es;
}

inline outerdraw::outerplanar_graph cycle(int n) { return outerdraw::recognize_outerplanar(n, cycle_edges(n)); }

// brute-force two-colouring by bfs
inline std::vector<int> bfs_colors(int n, const std::vector<outerdraw::edge>& es) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : es) adj[u].push_back(v), adj[v].push_back(u);
    std::vector<int> col(n, -1), q{0};
    col[0] = 0;
    for (size_t i = 0; i < q.size(); ++i)
        for (int w : adj[q[i]])
            if (col[w] < 0) col[w] = 1 - col[q[i]], q.push_back(w);
    return col;
}

}  // namespace th
