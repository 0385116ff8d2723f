#include "outerdraw/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "outerdraw/errors.hpp"

namespace outerdraw {

const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_input: return "InvalidInput";
        case errc::not_outerplanar: return "NotOuterplanar";
        case errc::not_biconnected: return "NotBiconnected";
        case errc::empty_or_trivial: return "EmptyOrTrivial";
        case errc::not_bipartite: return "NotBipartite";
        case errc::edge_not_on_outer_face: return "EdgeNotOnOuterFace";
        case errc::angle_too_large: return "AngleTooLarge";
        case errc::infeasible_placement: return "InfeasiblePlacement";
        case errc::wedge_too_narrow: return "WedgeTooNarrow";
        case errc::not_quadrangulated: return "NotQuadrangulated";
        case errc::placement_degenerate: return "PlacementDegenerate";
        case errc::size_limit: return "SizeLimit";
        case errc::non_positive_delta: return "NonPositiveDelta";
        case errc::epsilon_out_of_range: return "EpsilonOutOfRange";
        case errc::degenerate_triangle: return "DegenerateTriangle";
        case errc::embedding_violated: return "EmbeddingViolated";
        case errc::not_nested_family: return "NotNestedFamily";
        case errc::zero_length_edge: return "ZeroLengthEdge";
        case errc::not_fan_pendant: return "NotFanPendant";
    }
    return "Unknown";
}

bool outerplanar_graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n) return false;
    return std::binary_search(edges.begin(), edges.end(), make_edge(u, v));
}

bool outerplanar_graph::is_outer_edge(int u, int v) const {
    if (!has_edge(u, v)) return false;
    int d = (pos[v] - pos[u] + n) % n;
    return d == 1 || d == n - 1;
}

std::vector<std::vector<int>> outerplanar_graph::inner_faces() const {
    // directed edge u->v, face on its left; next is the neighbour before u at v
    std::vector<std::vector<int>> idx(n);  // idx[v][k]: visited flag for v->rotation[v][k]
    for (int v = 0; v < n; ++v) idx[v].assign(rotation[v].size(), 0);
    auto index_in = [&](int v, int w) {
        const auto& r = rotation[v];
        // rotation sorted by cyclic offset from v
        int key = (pos[w] - pos[v] + n) % n;
        int lo = 0, hi = (int)r.size() - 1;
        while (lo < hi) {
            int mid = (lo + hi) / 2;
            if ((pos[r[mid]] - pos[v] + n) % n < key) lo = mid + 1; else hi = mid;
        }
        return lo;
    };
    std::vector<std::vector<int>> faces;
    int c0 = outer_cycle[0], c1 = outer_cycle[1];
    for (int u = 0; u < n; ++u) {
        for (size_t k = 0; k < rotation[u].size(); ++k) {
            if (idx[u][k]) continue;
            std::vector<int> f;
            int a = u, b = rotation[u][k];
            bool outer = false;
            while (true) {
                int ka = index_in(a, b);
                if (idx[a][ka]) break;
                idx[a][ka] = 1;
                if (a == c1 && b == c0) outer = true;
                f.push_back(a);
                const auto& r = rotation[b];
                int kb = index_in(b, a);
                int w = r[(kb - 1 + (int)r.size()) % (int)r.size()];
                a = b;
                b = w;
            }
            if (outer) continue;
            auto it = std::min_element(f.begin(), f.end());
            std::rotate(f.begin(), it, f.end());
            faces.push_back(std::move(f));
        }
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

outerplanar_graph embed_with_cycle(int n, std::vector<edge> edges, std::vector<int> cycle) {
    outerplanar_graph g;
    g.n = n;
    std::sort(edges.begin(), edges.end());
    g.edges = std::move(edges);
    g.outer_cycle = std::move(cycle);
    g.pos.assign(n, 0);
    for (int i = 0; i < n; ++i) g.pos[g.outer_cycle[i]] = i;
    g.rotation.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.rotation[u].push_back(v);
        g.rotation[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& r = g.rotation[v];
        std::sort(r.begin(), r.end(), [&](int a, int b) {
            return (g.pos[a] - g.pos[v] + n) % n < (g.pos[b] - g.pos[v] + n) % n;
        });
    }
    return g;
}

namespace {

bool is_biconnected(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<size_t> it(n, 0);
    int timer = 0;
    std::vector<int> st{0};
    disc[0] = low[0] = timer++;
    int root_children = 0;
    while (!st.empty()) {
        int v = st.back();
        if (it[v] < adj[v].size()) {
            int w = adj[v][it[v]++];
            if (disc[w] < 0) {
                parent[w] = v;
                disc[w] = low[w] = timer++;
                if (v == 0) ++root_children;
                st.push_back(w);
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            st.pop_back();
            int p = parent[v];
            if (p >= 0) {
                low[p] = std::min(low[p], low[v]);
                if (p != 0 && low[v] >= disc[p]) return false;
            }
        }
    }
    if (timer < n) return false;  // disconnected
    return root_children <= 1;
}

// chords pairwise non-interleaving with respect to pos
bool chords_laminar(const outerplanar_graph& g) {
    int n = g.n;
    std::vector<std::pair<int, int>> ch;
    for (auto [u, v] : g.edges) {
        int a = g.pos[u], b = g.pos[v];
        if (a > b) std::swap(a, b);
        if (b - a == 1 || (a == 0 && b == n - 1)) continue;
        ch.push_back({a, b});
    }
    std::sort(ch.begin(), ch.end(), [](auto p, auto q) {
        return p.first != q.first ? p.first < q.first : p.second > q.second;
    });
    std::vector<int> st;  // right ends
    for (auto [a, b] : ch) {
        while (!st.empty() && st.back() <= a) st.pop_back();
        if (!st.empty() && st.back() < b) return false;
        st.push_back(b);
    }
    return true;
}

}  // namespace

outerplanar_graph recognize_outerplanar(int n, const std::vector<edge>& edge_list,
                                        const std::vector<int>& given_cycle) {
    if (n < 3) throw error(errc::empty_or_trivial, "need at least 3 vertices");
    std::vector<edge> edges;
    edges.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw error(errc::invalid_input, "vertex id out of range");
        if (u == v) throw error(errc::invalid_input, "self loop");
        edges.push_back(make_edge(u, v));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw error(errc::invalid_input, "duplicate edge");
    if ((long long)edges.size() > 2LL * n - 3) throw error(errc::not_outerplanar, "too many edges");

    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    if (!is_biconnected(n, adj)) throw error(errc::not_biconnected, "graph is not 2-connected");

    // ear reduction on a working copy
    std::vector<std::set<int>> w(n);
    for (auto [u, v] : edges) {
        w[u].insert(v);
        w[v].insert(u);
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> pq;
    for (int v = 0; v < n; ++v)
        if (w[v].size() == 2) pq.push(v);
    std::vector<char> gone(n, 0);
    std::vector<std::array<int, 3>> removed;  // v, a, b
    int left = n;
    while (left > 3) {
        while (!pq.empty() && (gone[pq.top()] || w[pq.top()].size() != 2)) pq.pop();
        if (pq.empty()) throw error(errc::not_outerplanar, "no degree-2 vertex left");
        int v = pq.top();
        pq.pop();
        int a = *w[v].begin(), b = *w[v].rbegin();
        gone[v] = 1;
        --left;
        w[a].erase(v);
        w[b].erase(v);
        w[a].insert(b);
        w[b].insert(a);
        removed.push_back({v, a, b});
        if (w[a].size() == 2) pq.push(a);
        if (w[b].size() == 2) pq.push(b);
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) rest.push_back(v);
    for (int v : rest)
        if (w[v].size() != 2) throw error(errc::not_outerplanar, "reduction did not end in a triangle");

    std::vector<int> nxt(n, -1), prv(n, -1);
    for (int i = 0; i < 3; ++i) {
        nxt[rest[i]] = rest[(i + 1) % 3];
        prv[rest[(i + 1) % 3]] = rest[i];
    }
    for (auto r = removed.rbegin(); r != removed.rend(); ++r) {
        auto [v, a, b] = *r;
        if (nxt[a] == b) {
        } else if (nxt[b] == a) {
            std::swap(a, b);
        } else {
            throw error(errc::not_outerplanar, "ear endpoints not adjacent on cycle");
        }
        nxt[a] = v; prv[v] = a;
        nxt[v] = b; prv[b] = v;
    }
    std::vector<int> cyc;
    cyc.reserve(n);
    int first = 0;
    int second = std::min(nxt[0], prv[0]);
    bool fwd = second == nxt[0];
    int cur = first;
    for (int i = 0; i < n; ++i) {
        cyc.push_back(cur);
        cur = fwd ? nxt[cur] : prv[cur];
    }

    outerplanar_graph g = embed_with_cycle(n, edges, cyc);
    for (int i = 0; i < n; ++i)
        if (!g.has_edge(cyc[i], cyc[(i + 1) % n]))
            throw error(errc::not_outerplanar, "outer cycle uses a missing edge");
    if (!chords_laminar(g)) throw error(errc::not_outerplanar, "chords interleave");

    if (!given_cycle.empty()) {
        bool ok = (int)given_cycle.size() == n;
        if (ok) {
            std::vector<int> seen(n, 0);
            for (int v : given_cycle) {
                if (v < 0 || v >= n || seen[v]) { ok = false; break; }
                seen[v] = 1;
            }
        }
        if (ok) {
            for (int i = 0; i < n && ok; ++i) {
                int d = (g.pos[given_cycle[(i + 1) % n]] - g.pos[given_cycle[i]] + n) % n;
                if (d != 1 && d != n - 1) ok = false;
            }
        }
        if (!ok) throw error(errc::not_outerplanar, "given outer_cycle is not the outer face");
    }
    return g;
}

maximal_outerplanar_graph triangulate(const outerplanar_graph& g) {
    maximal_outerplanar_graph m;
    std::vector<edge> all = g.edges;
    for (const auto& f : g.inner_faces()) {
        for (size_t i = 2; i + 1 < f.size(); ++i) {
            m.added_edges.push_back(make_edge(f[0], f[i]));
            all.push_back(make_edge(f[0], f[i]));
        }
    }
    std::sort(m.added_edges.begin(), m.added_edges.end());
    m.graph = embed_with_cycle(g.n, std::move(all), g.outer_cycle);
    return m;
}

std::vector<int> bipartition(const outerplanar_graph& g) {
    std::vector<int> col(g.n, -1);
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int s = 0; s < g.n; ++s) {
        if (col[s] >= 0) continue;
        col[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v]) {
                if (col[w] < 0) {
                    col[w] = col[v] ^ 1;
                    q.push(w);
                } else if (col[w] == col[v]) {
                    throw error(errc::not_bipartite, "odd cycle through edge " + std::to_string(v) + "-" + std::to_string(w));
                }
            }
        }
    }
    return col;
}

quadrangulated_graph quadrangulate_bipartite(const outerplanar_graph& g,
                                             const std::vector<int>& coloring) {
    if ((int)coloring.size() != g.n) throw error(errc::invalid_input, "coloring size mismatch");
    for (auto [u, v] : g.edges)
        if (coloring[u] == coloring[v]) throw error(errc::not_bipartite, "monochromatic edge");
    quadrangulated_graph q;
    q.coloring = coloring;
    std::vector<edge> all = g.edges;
    for (auto f : g.inner_faces()) {
        if (f.size() % 2) throw error(errc::not_bipartite, "odd face");
        while (f.size() > 4) {
            q.added_edges.push_back(make_edge(f[0], f[3]));
            all.push_back(make_edge(f[0], f[3]));
            f.erase(f.begin() + 1, f.begin() + 3);
        }
    }
    std::sort(q.added_edges.begin(), q.added_edges.end());
    q.graph = embed_with_cycle(g.n, std::move(all), g.outer_cycle);
    return q;
}

dual_tree make_dual_tree(const maximal_outerplanar_graph& m) {
    dual_tree t;
    std::vector<std::pair<edge, int>> owner;
    for (const auto& f : m.graph.inner_faces()) {
        int id = (int)t.triangles.size();
        t.triangles.push_back({f[0], f[1], f[2]});
        for (int i = 0; i < 3; ++i) owner.push_back({make_edge(f[i], f[(i + 1) % 3]), id});
    }
    std::sort(owner.begin(), owner.end());
    for (size_t i = 0; i + 1 < owner.size(); ++i) {
        if (owner[i].first == owner[i + 1].first) {
            t.adjacency.push_back({owner[i].second, owner[i + 1].second});
            t.shared_edge.push_back(owner[i].first);
        }
    }
    return t;
}

edge default_root_edge(const outerplanar_graph& g) {
    edge best{g.n, g.n};
    for (int i = 0; i < g.n; ++i) {
        edge e = make_edge(g.outer_cycle[i], g.outer_cycle[(i + 1) % g.n]);
        best = std::min(best, e);
    }
    return best;
}

}  // namespace outerdraw
