#include "outerdraw/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "outerdraw/errors.hpp"

namespace outerdraw {

ratio_report edge_length_ratio(const drawing& d) {
    if (d.edges.empty()) throw error(errc::invalid_input, "drawing has no edges");
    ratio_report r;
    r.min_len = std::numeric_limits<double>::infinity();
    r.max_len = 0;
    for (size_t i = 0; i < d.edges.size(); ++i) {
        double l = d.length(i);
        if (l < r.min_len) { r.min_len = l; r.min_edge = d.edges[i]; }
        if (l > r.max_len) { r.max_len = l; r.max_edge = d.edges[i]; }
    }
    if (!(r.min_len > 0)) throw error(errc::zero_length_edge, "edge of length zero");
    r.ratio = r.max_len / r.min_len;
    return r;
}

namespace {

struct box {
    double x0, x1, y0, y1;
};

std::vector<box> edge_boxes(const drawing& d, double pad) {
    std::vector<box> b(d.edges.size());
    for (size_t i = 0; i < d.edges.size(); ++i) {
        point p = d.pos[d.edges[i].first], q = d.pos[d.edges[i].second];
        b[i] = {std::min(p.x, q.x) - pad, std::max(p.x, q.x) + pad, std::min(p.y, q.y) - pad,
                std::max(p.y, q.y) + pad};
    }
    return b;
}

// calls f(i, j) for every pair of edges whose boxes overlap
template <class F>
void box_pairs(const std::vector<box>& b, F f) {
    std::vector<size_t> ord(b.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](size_t i, size_t j) { return b[i].x0 < b[j].x0; });
    for (size_t a = 0; a < ord.size(); ++a) {
        const box& bi = b[ord[a]];
        for (size_t c = a + 1; c < ord.size() && b[ord[c]].x0 <= bi.x1; ++c) {
            const box& bj = b[ord[c]];
            if (bj.y0 > bi.y1 || bi.y0 > bj.y1) continue;
            size_t i = ord[a], j = ord[c];
            if (i > j) std::swap(i, j);
            f(i, j);
        }
    }
}

point line_meet(point a, point b, point c, point d) {
    point r = b - a, s = d - c;
    double den = cross(r, s);
    if (den == 0) return a;
    return a + (cross(c - a, s) / den) * r;
}

double point_seg_dist(point p, point a, point b) {
    point ab = b - a;
    double l2 = dot(ab, ab);
    double t = l2 > 0 ? std::clamp(dot(p - a, ab) / l2, 0.0, 1.0) : 0.0;
    return dist(p, a + t * ab);
}

}  // namespace

std::vector<crossing> find_crossings(const drawing& d) {
    std::vector<crossing> out;
    auto b = edge_boxes(d, 0);
    box_pairs(b, [&](size_t i, size_t j) {
        auto [u1, v1] = d.edges[i];
        auto [u2, v2] = d.edges[j];
        point a = d.pos[u1], bb = d.pos[v1], c = d.pos[u2], e = d.pos[v2];
        int shared = -1, oi = -1, oj = -1;
        if (u1 == u2) { shared = u1; oi = v1; oj = v2; }
        else if (u1 == v2) { shared = u1; oi = v1; oj = u2; }
        else if (v1 == u2) { shared = v1; oi = u1; oj = v2; }
        else if (v1 == v2) { shared = v1; oi = u1; oj = u2; }
        if (shared >= 0) {
            point s = d.pos[shared], p = d.pos[oi], q = d.pos[oj];
            if (orient_sign(s, p, q) == 0 && dot(p - s, q - s) > 0)
                out.push_back({d.edges[i], d.edges[j], s});
            return;
        }
        if (segments_intersect(a, bb, c, e)) out.push_back({d.edges[i], d.edges[j], line_meet(a, bb, c, e)});
    });
    std::sort(out.begin(), out.end(), [](const crossing& x, const crossing& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    return out;
}

std::vector<std::pair<edge, edge>> near_degenerate(const drawing& d, double eps) {
    std::vector<std::pair<edge, edge>> out;
    auto b = edge_boxes(d, eps);
    box_pairs(b, [&](size_t i, size_t j) {
        auto [u1, v1] = d.edges[i];
        auto [u2, v2] = d.edges[j];
        if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) return;
        point a = d.pos[u1], bb = d.pos[v1], c = d.pos[u2], e = d.pos[v2];
        if (segments_intersect(a, bb, c, e)) return;
        double m = std::min({point_seg_dist(a, c, e), point_seg_dist(bb, c, e), point_seg_dist(c, a, bb),
                             point_seg_dist(e, a, bb)});
        if (m < eps) out.push_back({d.edges[i], d.edges[j]});
    });
    std::sort(out.begin(), out.end());
    return out;
}

strip_report check_strip_certificate(const strip_fragment& f, double eps, double guard) {
    strip_report r;
    auto fail = [&](std::string s) {
        r.ok = false;
        r.failures.push_back(std::move(s));
    };
    point base = f.s1 - f.s0;
    double side = cross(base, f.d) > 0 ? 1.0 : -1.0;
    double toward1 = cross(f.d, base) > 0 ? 1.0 : -1.0;
    auto pos_of = [&](int v) {
        for (size_t i = 0; i < f.vertices.size(); ++i)
            if (f.vertices[i] == v) return f.pts[i];
        throw error(errc::invalid_input, "fragment edge uses unknown vertex");
    };

    // (i)
    for (size_t i = 0; i < f.pts.size(); ++i) {
        point p = f.pts[i];
        bool in = side * cross(base, p - f.s0) >= -eps && toward1 * cross(f.d, p - f.s0) >= -eps &&
                  toward1 * cross(f.d, p - f.s1) <= eps;
        if (!in) fail("(i) vertex " + std::to_string(f.vertices[i]) + " outside strip");
    }
    // (ii)
    for (auto [u, v] : f.external) {
        point a = pos_of(u), b = pos_of(v);
        point e = b - a;
        if (cross(e, f.d) == 0) {
            fail("(ii) external edge " + std::to_string(u) + "-" + std::to_string(v) + " parallel to d");
            continue;
        }
        double sd = cross(e, f.d) > 0 ? 1.0 : -1.0;
        double tw = cross(f.d, e) > 0 ? 1.0 : -1.0;
        for (size_t i = 0; i < f.pts.size(); ++i) {
            int w = f.vertices[i];
            if (w == u || w == v) continue;
            point p = f.pts[i];
            if (sd * cross(e, p - a) > eps && tw * cross(f.d, p - a) > eps && tw * cross(f.d, p - b) < -eps)
                fail("(ii) vertex " + std::to_string(w) + " inside strip of " + std::to_string(u) + "-" +
                     std::to_string(v));
        }
    }
    // (iii)
    std::vector<edge> unit_edges = f.external;
    unit_edges.push_back(f.root);
    std::sort(unit_edges.begin(), unit_edges.end());
    for (auto [u, v] : f.edges) {
        double l = dist(pos_of(u), pos_of(v));
        std::string name = std::to_string(u) + "-" + std::to_string(v);
        if (std::binary_search(unit_edges.begin(), unit_edges.end(), make_edge(u, v))) {
            if (std::fabs(l - 1) > eps) fail("(iii) unit edge " + name + " has length " + std::to_string(l));
        } else if (!(l > 0.5 && l < 1)) {
            fail("(iii) edge " + name + " has length " + std::to_string(l));
        }
    }
    // (iv)
    for (auto [u, v] : f.external) {
        double t = line_angle(pos_of(v) - pos_of(u), f.d);
        if (!(t < theta0() - guard))
            fail("(iv) external edge " + std::to_string(u) + "-" + std::to_string(v) + " angle too large");
    }
    return r;
}

embedding_report check_embedding_preserved(const drawing& d, const std::vector<nested_vertex>& fa) {
    embedding_report r;
    for (const auto& nv : fa) {
        const auto& f = nv.face;
        if (!point_in_triangle_strict(d.pos[nv.v], d.pos[f[0]], d.pos[f[1]], d.pos[f[2]]))
            r.misplaced.push_back(nv.v);
    }
    r.crossings = find_crossings(d);
    r.ok = r.misplaced.empty() && r.crossings.empty();
    return r;
}

namespace {

// interiors of two triangles are disjoint (separating axis)
bool interiors_disjoint(const std::array<point, 3>& s, const std::array<point, 3>& t, double tol) {
    for (const auto* tri : {&s, &t}) {
        for (int i = 0; i < 3; ++i) {
            point ax = perp((*tri)[(i + 1) % 3] - (*tri)[i]);
            double a0 = 1e300, a1 = -1e300, b0 = 1e300, b1 = -1e300;
            for (auto p : s) { double x = dot(ax, p); a0 = std::min(a0, x); a1 = std::max(a1, x); }
            for (auto p : t) { double x = dot(ax, p); b0 = std::min(b0, x); b1 = std::max(b1, x); }
            double sc = norm(ax) * tol;
            if (a1 <= b0 + sc || b1 <= a0 + sc) return true;
        }
    }
    return false;
}

}  // namespace

packing_report packing_diagnostic(const drawing& d, int k) {
    if (k < 1 || d.n != 2 * k + 4) throw error(errc::not_fan_pendant, "vertex count does not match 2k+4");
    auto ref = gen_fan_pendant(k).graph.edges;
    std::vector<edge> have = d.edges;
    std::sort(have.begin(), have.end());
    if (have != ref) throw error(errc::not_fan_pendant, "edge set does not match the fan-pendant graph");
    packing_report r;
    r.k = k;
    auto rr = edge_length_ratio(d);
    double sc = 1 / rr.max_len;
    for (int v = 0; v < d.n; ++v) r.max_apex_dist = std::max(r.max_apex_dist, sc * dist(d.pos[v], d.pos[0]));
    r.all_in_disk = r.max_apex_dist <= 2 + 1e-9;
    r.delta = sc * rr.min_len - 0.5;
    r.nu_bound = r.delta > 0 ? 8 * M_PI / std::sqrt(r.delta + r.delta * r.delta)
                             : std::numeric_limits<double>::infinity();
    r.min_pendant_area = std::numeric_limits<double>::infinity();
    std::vector<std::array<point, 3>> kept;
    for (int i = 1; i <= k + 1; ++i) {
        std::array<point, 3> t{sc * d.pos[i], sc * d.pos[i + 1], sc * d.pos[k + 2 + i]};
        r.min_pendant_area = std::min(r.min_pendant_area, triangle_area(t[0], t[1], t[2]));
        bool ok = triangle_area(t[0], t[1], t[2]) > 0;
        for (const auto& o : kept)
            if (!interiors_disjoint(t, o, 1e-12)) ok = false;
        if (ok) kept.push_back(t);
    }
    r.disjoint_pendants = (int)kept.size();
    return r;
}

}  // namespace outerdraw
