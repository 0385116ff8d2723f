#include "outerdraw/analysis.hpp"

#include <cmath>
#include <map>

#include "outerdraw/errors.hpp"
#include "outerdraw/validation.hpp"

namespace outerdraw {

bisector_result perimeter_bisector(point A, point B, point C) {
    if (triangle_area(A, B, C) < 1e-12) throw error(errc::degenerate_triangle, "degenerate triangle");
    double a = dist(B, C), b = dist(C, A), c = dist(A, B);
    double bd = (c + b - a) / 2;
    bisector_result r;
    r.D = B + (bd / c) * (A - B);
    double cd = dist(C, r.D);
    r.p_left = b + (c - bd) + cd;
    r.p_right = a + bd + cd;
    return r;
}

namespace {

double perimeter(point a, point b, point c) { return dist(a, b) + dist(b, c) + dist(c, a); }

}  // namespace

descent_report perimeter_descent_audit(const drawing& d0, const embedded_graph& g, double rho_star, double eps_num) {
    if (!(rho_star >= 1)) throw error(errc::invalid_input, "rho_star must be at least 1");
    if (d0.n != g.graph.graph.n || g.face_assignment.empty())
        throw error(errc::not_nested_family, "drawing does not match the nested graph");
    auto emb = check_embedding_preserved(d0, g.face_assignment);
    if (!emb.ok) throw error(errc::embedding_violated, "drawing does not preserve the embedding");

    drawing d = d0;
    double s = dist(d.pos[0], d.pos[1]);
    if (!(s > 0)) throw error(errc::degenerate_triangle, "base edge has zero length");
    for (auto& p : d.pos) p = (1 / s) * (p - d.pos[0]) + d.pos[0];

    std::map<edge, int> child;
    for (const auto& nv : g.face_assignment) child[make_edge(nv.e.first, nv.e.second)] = nv.v;
    auto child_of = [&](int u, int v) {
        auto it = child.find(make_edge(u, v));
        return it == child.end() ? -1 : it->second;
    };

    descent_report r;
    r.rho_star = rho_star;
    r.min_edge = 1 / rho_star;
    r.bound_steps = (long long)std::ceil(3 * rho_star * 2 * rho_star);
    const double need = 1 / (2 * rho_star) - eps_num;

    const auto& first = g.face_assignment[0];
    int a = first.e.first, b = first.e.second, c = first.v;
    double prev = INFINITY;
    while (true) {
        point A = d.pos[a], B = d.pos[b], C = d.pos[c];
        if (triangle_area(A, B, C) < 1e-12) throw error(errc::degenerate_triangle, "audit reached a degenerate triangle");
        descent_step st;
        st.tri = {a, b, c};
        st.perimeter = perimeter(A, B, C);
        if (!(st.perimeter < prev)) r.strictly_decreasing = false;
        prev = st.perimeter;
        double ab = dist(A, B), ac = dist(A, C), bc = dist(B, C);
        int ca = child_of(a, c), cb = child_of(b, c);
        if (ab >= ac && ab >= bc) {
            if (ca < 0 && cb < 0) {
                r.steps.push_back(st);
                break;
            }
            auto bis = perimeter_bisector(A, B, C);
            bool in_a = ca >= 0 && point_in_triangle_strict(d.pos[ca], C, bis.D, A);
            bool in_b = cb >= 0 && point_in_triangle_strict(d.pos[cb], C, bis.D, B);
            if (!in_a && !in_b) throw error(errc::embedding_violated, "no sub-triangle holds the next face");
            double sa = st.perimeter - bis.p_left, sb = st.perimeter - bis.p_right;
            bool take_a = in_a && (!in_b || sa >= sb);
            st.bisected = true;
            st.shrink = take_a ? sa : sb;
            st.certified = st.shrink >= need;
            if (st.certified) ++r.certified_steps;
            r.steps.push_back(st);
            if (take_a) b = c, c = ca;
            else a = b, b = c, c = cb;
        } else {
            // longest side is ac or bc; its face lies inside T
            bool via_a = ac >= bc;
            int nxt = via_a ? ca : cb;
            if (nxt < 0) {
                r.steps.push_back(st);
                break;
            }
            point N = d.pos[nxt];
            st.shrink = st.perimeter - (via_a ? perimeter(A, C, N) : perimeter(B, C, N));
            r.steps.push_back(st);
            if (via_a) b = c, c = nxt;
            else a = b, b = c, c = nxt;
        }
    }
    r.contradiction = r.certified_steps >= r.bound_steps;
    return r;
}

}  // namespace outerdraw
