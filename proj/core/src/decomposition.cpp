#include "outerdraw/decomposition.hpp"

#include <algorithm>

#include "outerdraw/errors.hpp"

namespace outerdraw {

triangle_mesh::triangle_mesh(const outerplanar_graph& g) : n(g.n), edges(g.edges) {
    edge_tris.assign(edges.size(), {-1, -1});
    for (const auto& f : g.inner_faces()) {
        if (f.size() != 3) throw error(errc::invalid_input, "graph is not maximal outerplanar");
        int id = (int)tris.size();
        tris.push_back({f[0], f[1], f[2]});
        for (int i = 0; i < 3; ++i) {
            auto& et = edge_tris[edge_id(f[i], f[(i + 1) % 3])];
            (et[0] < 0 ? et[0] : et[1]) = id;
        }
    }
}

int triangle_mesh::edge_id(int u, int v) const {
    edge e = make_edge(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) return -1;
    return (int)(it - edges.begin());
}

int triangle_mesh::third(int tri, int u, int v) const {
    for (int x : tris[tri])
        if (x != u && x != v) return x;
    return -1;
}

int triangle_mesh::across(int u, int v, int from) const {
    int e = edge_id(u, v);
    if (e < 0) return -1;
    for (int t : edge_tris[e])
        if (t >= 0 && t != from) return t;
    return -1;
}

namespace {

// extend seq across its newest pair until no triangle is left
void extend(const triangle_mesh& mesh, std::vector<int>& seq, int prev_tri, std::vector<int>& tris) {
    while (true) {
        int u = seq[seq.size() - 2], v = seq.back();
        int t = mesh.across(u, v, prev_tri);
        if (t < 0) break;
        seq.push_back(mesh.third(t, u, v));
        tris.push_back(t);
        prev_tri = t;
    }
}

}  // namespace

chain grow_chain(const triangle_mesh& mesh, int a, int b, int tri0, int minus_hint) {
    chain c;
    c.root_edge = make_edge(a, b);
    int v1 = mesh.third(tri0, a, b);
    if (minus_hint < 0) {
        int ta = mesh.across(a, v1, tri0), tb = mesh.across(b, v1, tri0);
        int xa = ta < 0 ? -1 : mesh.third(ta, a, v1);
        int xb = tb < 0 ? -1 : mesh.third(tb, b, v1);
        int plus;
        if (xa >= 0 && xb >= 0) plus = xa < xb ? a : b;
        else if (xa >= 0) plus = a;
        else if (xb >= 0) plus = b;
        else plus = std::min(a, b);
        minus_hint = plus == a ? b : a;
    }
    int vp = minus_hint == a ? b : a, vm = minus_hint;
    c.plus_seq = {vp, v1};
    c.minus_seq = {v1, vm};
    std::vector<int> ptris, mtris;
    extend(mesh, c.plus_seq, tri0, ptris);
    extend(mesh, c.minus_seq, tri0, mtris);
    c.t = (int)ptris.size();
    c.s = -(int)mtris.size();
    for (auto it = mtris.rbegin(); it != mtris.rend(); ++it) c.triangles.push_back(*it);
    c.triangles.push_back(tri0);
    for (int t : ptris) c.triangles.push_back(t);

    c.labels.push_back({vp, 0});
    for (size_t j = 1; j < c.plus_seq.size(); ++j) c.labels.push_back({c.plus_seq[j], (int)j});
    for (size_t j = 1; j < c.minus_seq.size(); ++j) c.labels.push_back({c.minus_seq[j], 1 - (int)j});

    for (const auto* seq : {&c.plus_seq, &c.minus_seq}) {
        for (size_t j = 0; j + 1 < seq->size(); ++j) c.short_edges.push_back(make_edge((*seq)[j], (*seq)[j + 1]));
        for (size_t j = 0; j + 2 < seq->size(); ++j) c.external_edges.push_back(make_edge((*seq)[j], (*seq)[j + 2]));
    }
    return c;
}

chain maximal_chain(const maximal_outerplanar_graph& g, edge e) {
    if (!g.graph.is_outer_edge(e.first, e.second))
        throw error(errc::edge_not_on_outer_face, "root edge is not an outer edge");
    triangle_mesh mesh(g.graph);
    int t = mesh.edge_tris[mesh.edge_id(e.first, e.second)][0];
    if (t < 0) {
        chain c;
        c.root_edge = e;
        return c;
    }
    return grow_chain(mesh, e.first, e.second, t);
}

chain_tree chain_decompose(const maximal_outerplanar_graph& g, edge e) {
    e = make_edge(e.first, e.second);
    if (!g.graph.is_outer_edge(e.first, e.second))
        throw error(errc::edge_not_on_outer_face, "root edge is not an outer edge");
    triangle_mesh mesh(g.graph);
    chain_tree ct;
    int t0 = mesh.edge_tris[mesh.edge_id(e.first, e.second)][0];
    ct.chains.push_back(grow_chain(mesh, e.first, e.second, t0));
    ct.parent.push_back(-1);
    ct.children.push_back({});
    std::vector<char> tri_used(mesh.tris.size(), 0);
    // breadth-first so chain ids follow depth
    for (size_t ci = 0; ci < ct.chains.size(); ++ci) {
        if (ct.chains[ci].degenerate()) continue;
        for (int t : ct.chains[ci].triangles) tri_used[t] = 1;
        std::vector<edge> ext = ct.chains[ci].external_edges;
        for (auto [u, v] : ext) {
            int eid = mesh.edge_id(u, v);
            int nt = -1;
            for (int t : mesh.edge_tris[eid])
                if (t >= 0 && !tri_used[t]) nt = t;
            int id = (int)ct.chains.size();
            if (nt < 0) {
                chain c;
                c.root_edge = make_edge(u, v);
                ct.chains.push_back(std::move(c));
            } else {
                ct.chains.push_back(grow_chain(mesh, u, v, nt));
                ct.children[ci].push_back(id);
            }
            ct.parent.push_back((int)ci);
            ct.children.push_back({});
        }
    }
    for (const auto& c : ct.chains) {
        ct.long_edges.push_back(c.root_edge);
        for (auto s : c.short_edges) ct.short_edges.push_back(s);
    }
    std::sort(ct.long_edges.begin(), ct.long_edges.end());
    std::sort(ct.short_edges.begin(), ct.short_edges.end());
    return ct;
}

}  // namespace outerdraw
