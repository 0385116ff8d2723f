#include "outerdraw/layout.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "outerdraw/errors.hpp"

namespace outerdraw {

void check_params(const layout_params& p) {
    if (!(p.mu > 0 && 0.5 + p.mu < p.leg_length && p.leg_length < 1))
        throw error(errc::invalid_input, "need 0 < mu and 1/2 + mu < leg_length < 1");
    if (!(p.ray_rotation >= 0 && p.ray_rotation < 0.5)) throw error(errc::invalid_input, "ray_rotation out of range");
    if (!(p.eps_num > 0 && p.eps_num < 1e-3)) throw error(errc::invalid_input, "eps_num out of range");
    if (!(p.mu_floor > 0 && p.mu_floor <= p.mu)) throw error(errc::invalid_input, "mu_floor out of range");
    if (!(p.theta_max > 0.1 && p.theta_max < theta0() - p.guard))
        throw error(errc::invalid_input, "theta_max out of range");
}

namespace {

constexpr double min_rot = 1e-7;

// chain frame: d is +y, v0+ at the origin, v0- on the +x side
struct frame {
    point origin, ex, ey;
    bool reflected = false;
    point world(point f) const { return origin + f.x * ex + f.y * ey; }
    point world_dir(point f) const { return f.x * ex + f.y * ey; }
    point local(point w) const { return {dot(w - origin, ex), dot(w - origin, ey)}; }
    point local_dir(point w) const { return {dot(w, ex), dot(w, ey)}; }
};

frame make_frame(point pplus, point pminus, point d) {
    frame f;
    f.origin = pplus;
    f.ey = d;
    f.ex = {d.y, -d.x};
    if (dot(pminus - pplus, f.ex) < 0) {
        f.ex = -1.0 * f.ex;
        f.reflected = true;
    }
    return f;
}

// ray angle measured ccw from +y in the frame
point ray_dir(double a) { return {-std::sin(a), std::cos(a)}; }

double margin(double len) { return std::min(len - 0.5, 1 - len); }

struct geom_in {
    double sigma = 1, c = 0;
    double lean_l = 0, lean_r = 0;
    int n_plus = 0, n_minus = 0;
    std::vector<double> w_plus, w_minus;  // need of the child beyond each L-edge, -1 when none
    bool spec_lone = false;
    double leg = 0.75;
    double mu_goal = 0.01;
    double fixed_rotation = 0;
    double cap = 1;
};

struct geom_out {
    std::vector<point> plus_pts, minus_pts;
    std::vector<double> plus_ang, minus_ang;  // ray angle per vertex
    double margin = 0;
};

double g_min(double t, double r) {
    double s = std::min(t, 1 - t);
    return std::sqrt(std::max(0.0, r * r - s * s));
}

int rail_steps(int tris) { return std::max(1, (tris + 1) / 2); }

std::vector<double> rail(const std::vector<double>& w, int parity) {
    std::vector<double> r;
    for (size_t j = parity; j < w.size(); j += 2) r.push_back(w[j]);
    return r;
}

double side_need(const std::vector<double>& w) {
    double s = 0;
    bool any = false;
    for (double x : w)
        if (x >= 0) s += x, any = true;
    return any ? s + 1 : 0;
}

// outward angles for rail vertices bottom..top; w[i] sits on edge (i, i+1).
// the top vertex keeps one unit of offset, each child edge takes its need
std::vector<double> fan(const std::vector<double>& w, double lo, double hi) {
    size_t nv = w.size() + 1;
    std::vector<double> u(nv, lo);
    double units = side_need(w);
    if (units <= 0 || hi <= lo) return u;
    double k = (hi - lo) / units;
    u[nv - 1] = lo + k;
    for (size_t i = nv - 1; i-- > 0;) u[i] = u[i + 1] + k * std::max(0.0, w[i]);
    u[0] = hi;
    return u;
}

struct v1_eval {
    bool ok = false;
    double m = -1, rate = 0, room_p = 0, room_m = 0;
};

v1_eval eval_v1(const geom_in& in, point v, bool want_room) {
    v1_eval r;
    double x = v.x, y = v.y;
    if (!(x > 0 && x < in.sigma)) return r;
    if (!(y * in.sigma > x * in.c)) return r;  // above the base line
    bool hp = in.n_plus > 0, hm = in.n_minus > 0;
    if (hp && !(y > 0 && y < 1)) return r;
    if (hm && !(in.c - y > 0 && in.c - y < 1)) return r;
    point pp{0, 0}, pm{in.sigma, in.c};
    double m = std::min(margin(dist(v, pp)), margin(dist(v, pm)));
    if (hp) m = std::min(m, margin(dist(point{0, 1}, v)));
    if (hm) m = std::min(m, margin(dist(v + point{0, 1}, pm)));
    r.ok = true;
    r.m = m;
    double rr = 0.5 + std::min(in.mu_goal, m) * 0.5;
    if (hp) r.room_p = x - g_min(y, rr);
    if (hm) r.room_m = (in.sigma - x) - g_min(in.c - y, rr);
    if (want_room)
        r.rate = std::max(0.0, r.room_p) / rail_steps(in.n_plus) + std::max(0.0, r.room_m) / rail_steps(in.n_minus);
    else
        r.rate = m;
    return r;
}

// at most 2^4 pieces after four rings
struct ivals {
    std::array<std::pair<double, double>, 16> v;
    int n = 0;
    void add(double a, double b) {
        if (a < b && n < 16) v[n++] = {a, b};
    }
    bool empty() const { return n == 0; }
    const std::pair<double, double>* begin() const { return v.data(); }
    const std::pair<double, double>* end() const { return v.data() + n; }
};

// y values at column x keeping every required distance inside (1/2 + m, 1 - m)
ivals feasible_y(const geom_in& in, double x, double m) {
    bool hp = in.n_plus > 0, hm = in.n_minus > 0;
    double lo = in.c * x / in.sigma, hi = std::max(0.0, in.c) + 1.5;
    if (hp) lo = std::max(lo, 0.0), hi = std::min(hi, 1.0);
    if (hm) lo = std::max(lo, in.c - 1), hi = std::min(hi, in.c);
    ivals cur;
    cur.add(lo, hi);
    double r1 = 0.5 + m, r2 = 1 - m;
    auto ring = [&](point q) {
        double dx = x - q.x;
        if (std::abs(dx) >= r2) {
            cur.n = 0;
            return;
        }
        double o = std::sqrt(r2 * r2 - dx * dx);
        double i = std::abs(dx) < r1 ? std::sqrt(r1 * r1 - dx * dx) : 0;
        ivals nx;
        for (auto [a, b] : cur) nx.add(std::max(a, q.y - o), std::min(b, q.y - i));
        for (auto [a, b] : cur) nx.add(std::max(a, q.y + i), std::min(b, q.y + o));
        cur = nx;
    };
    ring({0, 0});
    ring({in.sigma, in.c});
    if (hp) ring({0, 1});
    if (hm) ring({in.sigma, in.c - 1});
    return cur;
}

point search_v1(const geom_in& in, bool want_room, v1_eval& best_eval) {
    const int N = 96;
    auto col = [&](int i) { return in.sigma * (i + 0.5) / N; };
    // best margin reachable per column
    std::vector<double> mx(N, -1);
    double top = -0.2;
    for (int i = 0; i < N; ++i) {
        double x = col(i);
        // negative margins only when the strip is too thin for doubles
        if (feasible_y(in, x, -0.2).empty()) continue;
        double lo = -0.2, hi = 0.25;
        for (int it = 0; it < 40; ++it) {
            double mid = (lo + hi) / 2;
            (feasible_y(in, x, mid).empty() ? hi : lo) = mid;
        }
        mx[i] = lo;
        top = std::max(top, lo);
    }
    best_eval = {};
    point best{};
    if (top <= -0.2) return best;
    double m_use = top > 0 ? std::min(in.mu_goal, top * 0.5) : top;
    auto consider = [&](point v) {
        auto e = eval_v1(in, v, want_room);
        if (!e.ok) return;
        if (!best_eval.ok || (std::min(e.m, m_use) > std::min(best_eval.m, m_use)) ||
            (std::min(e.m, m_use) == std::min(best_eval.m, m_use) && e.rate > best_eval.rate))
            best_eval = e, best = v;
    };
    for (int i = 0; i < N; ++i) {
        if (mx[i] < m_use) continue;
        double x = col(i);
        for (auto [a, b] : feasible_y(in, x, m_use)) {
            for (int j = 0; j <= 8; ++j) consider({x, a + (b - a) * (0.02 + 0.96 * j / 8)});
        }
    }
    return best;
}

geom_out chain_geometry(const geom_in& in_) {
    geom_in in = in_;
    // arms trade margin for rail room; the room feeds the children
    if (in.n_plus > 0 || in.n_minus > 0) in.mu_goal = std::min(in.mu_goal, 0.01 * in.sigma * in.sigma);
    geom_out out;
    bool hp = in.n_plus > 0, hm = in.n_minus > 0;
    point pp{0, 0}, pm{in.sigma, in.c};

    if (!hp && !hm) {
        point apex;
        bool done = false;
        if (in.spec_lone) {
            double h = std::sqrt(in.leg * in.leg - 0.25);
            point cand = point{in.sigma / 2, in.c / 2} + h * point{-in.c, in.sigma};
            if (cand.x > 0 && cand.x < in.sigma) apex = cand, done = true;
        }
        if (!done) {
            v1_eval e;
            apex = search_v1(in, false, e);
            if (!e.ok) throw error(errc::infeasible_placement, "no apex for lone triangle");
        }
        out.plus_pts = {pp, apex};
        out.minus_pts = {apex, pm};
        out.plus_ang.assign(2, 0);
        out.minus_ang.assign(2, 0);
        out.margin = std::min(margin(dist(apex, pp)), margin(dist(apex, pm)));
        return out;
    }

    auto wpo = rail(in.w_plus, 0), wpi = rail(in.w_plus, 1);
    auto wmi = rail(in.w_minus, 0), wmo = rail(in.w_minus, 1);
    bool two = hp && hm;
    bool corridor = two && side_need(wpi) + side_need(wmi) > 0;
    v1_eval ev;
    point v1 = search_v1(in, corridor, ev);
    if (!ev.ok) throw error(errc::infeasible_placement, "no feasible position for v1");
    double need = std::min(in.mu_goal, ev.m) * 0.5;

    double rpo = 0, rpi = 0, rmo = 0, rmi = 0;
    // floors keep the inner rails apart even when no margin survives
    double floor_p = std::min(min_rot, 0.05 * v1.x / rail_steps(in.n_plus));
    double floor_m = std::min(min_rot, 0.05 * (in.sigma - v1.x) / rail_steps(in.n_minus));
    auto rot = [&](double room, int tris, double share, double cap, double lo) {
        double tau = std::max(0.0, 0.95 * room / rail_steps(tris));
        double r = std::asin(std::min(cap, tau * share));
        if (in.fixed_rotation > 0) r = std::min(r, in.fixed_rotation);
        return std::max(r, lo);
    };
    if (corridor) {
        if (hp) rpo = rot(ev.room_p, in.n_plus, 0.03, 0.01, floor_p), rpi = rot(ev.room_p, in.n_plus, 0.95, 0.3, floor_p);
        if (hm) rmo = rot(ev.room_m, in.n_minus, 0.03, 0.01, floor_m), rmi = rot(ev.room_m, in.n_minus, 0.95, 0.3, floor_m);
    } else {
        if (hp) rpo = rpi = rot(ev.room_p, in.n_plus, 0.4, 0.01, floor_p);
        if (hm) rmo = rmi = rot(ev.room_m, in.n_minus, 0.4, 0.01, floor_m);
    }

    for (int attempt = 0;; ++attempt) {
        point eo_p{std::sin(rpo), std::cos(rpo)}, ei_p{-std::sin(rpi), std::cos(rpi)};
        point eo_m{-std::sin(rmo), std::cos(rmo)}, ei_m{std::sin(rmi), std::cos(rmi)};
        out.plus_pts.assign(in.n_plus + 2, {});
        out.minus_pts.assign(in.n_minus + 2, {});
        for (int j = 0; j < in.n_plus + 2; ++j)
            out.plus_pts[j] = j % 2 == 0 ? pp + (double)(j / 2) * eo_p : v1 + (double)((j - 1) / 2) * ei_p;
        for (int j = 0; j < in.n_minus + 2; ++j)
            out.minus_pts[j] = j % 2 == 0 ? v1 + (double)(j / 2) * ei_m : pm + (double)((j - 1) / 2) * eo_m;
        double m = 1;
        for (const auto* pts : {&out.plus_pts, &out.minus_pts})
            for (size_t j = 0; j + 1 < pts->size(); ++j) m = std::min(m, margin(dist((*pts)[j], (*pts)[j + 1])));
        out.margin = m;
        if (m >= need || attempt > 40) break;
        bool moved = false;
        for (auto [r, lo] : {std::pair{&rpo, floor_p}, {&rpi, floor_p}, {&rmo, floor_m}, {&rmi, floor_m}})
            if (*r > lo) *r = std::max(lo, *r / 2), moved = true;
        if (!moved) break;
    }

    out.plus_ang.assign(in.n_plus + 2, 0);
    out.minus_ang.assign(in.n_minus + 2, 0);
    auto apply = [](std::vector<double>& ang, int parity, const std::vector<double>& u, auto map) {
        size_t k = 0;
        for (size_t j = parity; j < ang.size() && k < u.size(); j += 2) ang[j] = map(u[k++]);
    };
    double lo_l = 0, lo_r = 0;
    if (two) {
        // corridor rays stay between the inner rails and below the side leans
        double ap = std::min(rpi, side_need(wpo) > 0 ? 0.5 * in.lean_l : in.lean_l);
        double am = std::min(rmi, side_need(wmo) > 0 ? 0.5 * in.lean_r : in.lean_r);
        double np = side_need(wpi), nm = side_need(wmi);
        double T = ap + am;
        double thp = T * (np + 1e-3) / (np + nm + 2e-3);
        apply(out.plus_ang, 1, fan(wpi, 0, thp), [&](double u) { return ap - u; });
        apply(out.minus_ang, 0, fan(wmi, 0, T - thp), [&](double u) { return -am + u; });
        if (corridor) lo_l = ap, lo_r = am;
    }
    if (hp) {
        double hi = std::min(in.lean_l, in.cap - rpo);
        apply(out.plus_ang, 0, fan(wpo, lo_l, hi), [](double u) { return u; });
    } else {
        point to = pp - v1;
        double g = std::atan2(-to.x, to.y);
        double hi = std::min({in.lean_l, in.cap - rmi, 0.9 * g});
        apply(out.minus_ang, 0, fan(wmi, lo_l, hi), [](double u) { return u; });
    }
    if (hm) {
        double hi = std::min(in.lean_r, in.cap - rmo);
        apply(out.minus_ang, 1, fan(wmo, lo_r, hi), [](double u) { return -u; });
    } else {
        point to = pm - v1;
        double g = std::atan2(to.x, to.y);
        double hi = std::min({in.lean_r, in.cap - rpi, 0.9 * g});
        apply(out.plus_ang, 1, fan(wpi, lo_r, hi), [](double u) { return -u; });
    }
    return out;
}

struct region {
    int a = -1, b = -1;  // region on the left of a -> b
    point dir_a, dir_b;
};

struct drawn_chain {
    std::vector<std::pair<int, point>> positions;
    std::vector<std::pair<edge, region>> child_regions;
    strip_fragment fragment;
};

drawn_chain draw_chain_geom(const chain& c, point pplus, point pminus, point d, double lean_l, double lean_r,
                            const std::vector<double>& w_plus, const std::vector<double>& w_minus,
                            const layout_params& p, bool spec_lone) {
    frame f = make_frame(pplus, pminus, d);
    point lm = f.local(pminus);
    geom_in in;
    in.sigma = lm.x;
    in.c = lm.y;
    if (!(in.sigma > 0)) in.sigma = 1e-300;  // out of precision; keep going
    in.lean_l = std::max(0.0, lean_l);
    in.lean_r = std::max(0.0, lean_r);
    in.n_plus = (int)c.plus_seq.size() - 2;
    in.n_minus = (int)c.minus_seq.size() - 2;
    in.w_plus = w_plus;
    in.w_minus = w_minus;
    in.spec_lone = spec_lone;
    in.leg = p.leg_length;
    in.mu_goal = std::min(p.mu, 0.01);
    in.fixed_rotation = p.ray_rotation;
    in.cap = p.theta_max - 1e-4;
    geom_out g = chain_geometry(in);

    drawn_chain out;
    auto put = [&](int v, point lp) { out.positions.push_back({v, f.world(lp)}); };
    out.positions.push_back({c.plus_seq[0], pplus});
    for (size_t j = 1; j < c.plus_seq.size(); ++j) put(c.plus_seq[j], g.plus_pts[j]);
    out.positions.push_back({c.minus_seq[1], pminus});
    for (size_t j = 2; j < c.minus_seq.size(); ++j) put(c.minus_seq[j], g.minus_pts[j]);

    auto make_region = [&](int lo_v, int hi_v, double a_lo, double a_hi, bool left_side) {
        region r;
        point dl = f.world_dir(ray_dir(a_lo)), dh = f.world_dir(ray_dir(a_hi));
        if (left_side) r = {lo_v, hi_v, dl, dh};
        else r = {hi_v, lo_v, dh, dl};
        if (f.reflected) std::swap(r.a, r.b), std::swap(r.dir_a, r.dir_b);
        return r;
    };
    // outer + rail and inner - rail face left, the others face right
    for (size_t j = 0; j + 2 < c.plus_seq.size(); ++j)
        out.child_regions.push_back({make_edge(c.plus_seq[j], c.plus_seq[j + 2]),
                                     make_region(c.plus_seq[j], c.plus_seq[j + 2], g.plus_ang[j], g.plus_ang[j + 2], j % 2 == 0)});
    for (size_t j = 0; j + 2 < c.minus_seq.size(); ++j)
        out.child_regions.push_back({make_edge(c.minus_seq[j], c.minus_seq[j + 2]),
                                     make_region(c.minus_seq[j], c.minus_seq[j + 2], g.minus_ang[j], g.minus_ang[j + 2], j % 2 == 0)});

    strip_fragment& fr = out.fragment;
    fr.d = d;
    fr.root = c.root_edge;
    for (auto& [v, pt] : out.positions) {
        fr.vertices.push_back(v);
        fr.pts.push_back(pt);
        if (v == c.root_edge.first) fr.s0 = pt;
        if (v == c.root_edge.second) fr.s1 = pt;
    }
    fr.edges = c.short_edges;
    fr.edges.push_back(c.root_edge);
    for (auto e : c.external_edges) fr.edges.push_back(e);
    fr.external = c.external_edges;
    return out;
}

double wrap_pos(double a) {
    while (a <= 0) a += 2 * M_PI;
    while (a > 2 * M_PI) a -= 2 * M_PI;
    return a;
}

// A is on the left when looking along d, so the A side is the frame's left when v0+ = A
struct side_needs {
    double left = 0, right = 0;
    double corridor = 0, corridor_rate = 0;
};

side_needs needs_of(const chain& c, const std::vector<double>& wp, const std::vector<double>& wm) {
    bool hp = c.plus_seq.size() > 2, hm = c.minus_seq.size() > 2;
    if (hp && hm)
        return {side_need(rail(wp, 0)), side_need(rail(wm, 1)), side_need(rail(wp, 1)) + side_need(rail(wm, 0)),
                1.0 / rail_steps((int)wp.size()) + 1.0 / rail_steps((int)wm.size())};
    if (hp) return {side_need(rail(wp, 0)), side_need(rail(wp, 1))};
    if (hm) return {side_need(rail(wm, 0)), side_need(rail(wm, 1))};
    return {};
}

}  // namespace

chain_fragment draw_chain_in_strip(const triangle_mesh& mesh, const chain& c_in, segment s, point d,
                                   const layout_params& p) {
    point dd = unit(d);
    point base = s.b - s.a;
    if (std::fabs(norm(base) - 1) > 1e-6) throw error(errc::invalid_input, "base segment must have length 1");
    double th = line_angle(base, dd);
    if (th >= theta0() - p.guard) throw error(errc::angle_too_large, "angle between s and d too large");
    chain_fragment out;
    // v0- must be the endpoint ahead along d
    chain c = c_in;
    if (!c.degenerate()) {
        int ahead = dot(s.b - s.a, dd) > 0 ? c.root_edge.second : c.root_edge.first;
        c = grow_chain(mesh, c.root_edge.first, c.root_edge.second, c.triangles[-c.s], ahead);
    }
    if (c.degenerate()) {
        out.positions = {{c.root_edge.first, s.a}, {c.root_edge.second, s.b}};
        return out;
    }
    point pplus = c.v0_plus() == c.root_edge.first ? s.a : s.b;
    point pminus = c.v0_plus() == c.root_edge.first ? s.b : s.a;
    std::vector<double> wp(std::max<int>(0, (int)c.plus_seq.size() - 2), -1.0);
    std::vector<double> wm(std::max<int>(0, (int)c.minus_seq.size() - 2), -1.0);
    auto dc = draw_chain_geom(c, pplus, pminus, dd, 0, 0, wp, wm, p, true);
    out.positions = dc.positions;
    out.fragment = dc.fragment;
    std::map<int, point> at(dc.positions.begin(), dc.positions.end());
    for (auto e : c.external_edges) out.external_segments.push_back({e, {at[e.first], at[e.second]}});
    return out;
}

maximal_layout draw_maximal_traced(const maximal_outerplanar_graph& g, edge e_prime, const layout_params& p,
                                   bool keep) {
    check_params(p);
    e_prime = make_edge(e_prime.first, e_prime.second);
    if (!g.graph.is_outer_edge(e_prime.first, e_prime.second))
        throw error(errc::edge_not_on_outer_face, "root edge is not an outer edge");
    triangle_mesh mesh(g.graph);
    int root_tri = mesh.across(e_prime.first, e_prime.second, -1);
    if (root_tri < 0) throw error(errc::empty_or_trivial, "graph has no triangle");

    int nt = (int)mesh.tris.size();
    std::vector<int> par(nt, -2), order{root_tri};
    par[root_tri] = -1;
    for (size_t i = 0; i < order.size(); ++i) {
        int t = order[i];
        for (int k = 0; k < 3; ++k) {
            int nb = mesh.across(mesh.tris[t][k], mesh.tris[t][(k + 1) % 3], t);
            if (nb >= 0 && par[nb] == -2) par[nb] = t, order.push_back(nb);
        }
    }
    // triangle beyond an edge, away from the root
    auto beyond = [&](edge e) {
        auto [t0, t1] = mesh.edge_tris[mesh.edge_id(e.first, e.second)];
        if (t0 >= 0 && t1 >= 0) return par[t1] == t0 ? t1 : t0;
        return -1;
    };

    // angular need of the subtree beyond an edge, from tie-rule chains
    std::vector<double> need(mesh.edges.size(), -1);
    auto need_at = [&](edge e0) {
        int id0 = mesh.edge_id(e0.first, e0.second);
        std::vector<edge> st{e0};
        while (!st.empty()) {
            edge e = st.back();
            int id = mesh.edge_id(e.first, e.second);
            if (need[id] >= 0) {
                st.pop_back();
                continue;
            }
            chain c = grow_chain(mesh, e.first, e.second, beyond(e));
            double sum = 0;
            bool any = false, pending = false;
            // children between the two inner rails live off the corridor, not the side lean
            std::vector<edge> inner;
            if (c.plus_seq.size() > 2 && c.minus_seq.size() > 2) {
                for (size_t j = 1; j + 2 < c.plus_seq.size(); j += 2) inner.push_back(make_edge(c.plus_seq[j], c.plus_seq[j + 2]));
                for (size_t j = 0; j + 2 < c.minus_seq.size(); j += 2) inner.push_back(make_edge(c.minus_seq[j], c.minus_seq[j + 2]));
            }
            for (auto x : c.external_edges) {
                if (beyond(x) < 0) continue;
                any = true;
                double nx = need[mesh.edge_id(x.first, x.second)];
                if (nx < 0) st.push_back(x), pending = true;
                else if (std::find(inner.begin(), inner.end(), x) == inner.end()) sum += nx;
            }
            if (!pending) {
                need[id] = any ? sum + 1 : 0;
                st.pop_back();
            }
        }
        return need[id0];
    };
    auto weights = [&](const std::vector<int>& seq) {
        std::vector<double> w;
        for (size_t j = 0; j + 2 < seq.size(); ++j) {
            edge e = make_edge(seq[j], seq[j + 2]);
            w.push_back(beyond(e) >= 0 ? need_at(e) : -1.0);
        }
        return w;
    };

    maximal_layout out;
    drawing& dr = out.d;
    dr.n = g.graph.n;
    dr.pos.assign(dr.n, {NAN, NAN});
    std::vector<char> placed(dr.n, 0);
    dr.pos[e_prime.first] = {0, 0};
    dr.pos[e_prime.second] = {1, 0};
    placed[e_prime.first] = placed[e_prime.second] = 1;
    std::vector<edge> long_edges{e_prime};

    struct job {
        int tri0;
        edge root;
        region r;
    };
    std::vector<job> stack;
    stack.push_back({root_tri, e_prime, {e_prime.first, e_prime.second, dir_of(M_PI - 1e-3), dir_of(1e-3)}});
    const double th_max = p.theta_max + 1e-6;
    int drawn = 0;
    while (!stack.empty()) {
        job jb = stack.back();
        stack.pop_back();
        point pa = dr.pos[jb.r.a], pb = dr.pos[jb.r.b];
        double psi = angle_of(pb - pa);
        double ba = std::min(wrap_pos(angle_of(jb.r.dir_a) - psi), M_PI);
        double bb = std::min(wrap_pos(angle_of(jb.r.dir_b) - psi), M_PI);
        if (bb > ba) bb = ba;

        struct plan {
            chain c;
            std::vector<double> wp, wm;
            double beta = 0, score = -1;
        };
        plan best;
        for (int lab = 0; lab < 2; ++lab) {
            plan pl;
            int vminus = lab == 0 ? jb.r.b : jb.r.a;
            pl.c = grow_chain(mesh, jb.root.first, jb.root.second, jb.tri0, vminus);
            pl.wp = weights(pl.c.plus_seq);
            pl.wm = weights(pl.c.minus_seq);
            auto sn = needs_of(pl.c, pl.wp, pl.wm);
            double nA = lab == 0 ? sn.left : sn.right, nB = lab == 0 ? sn.right : sn.left;
            // two-sided chains need some lean on both sides to open the corridor
            if (pl.c.plus_seq.size() > 2 && pl.c.minus_seq.size() > 2) nA = std::max(nA, 0.5), nB = std::max(nB, 0.5);
            // admissible beta: angle with the base at most th_max, v0- ahead
            std::vector<std::pair<double, double>> iv;
            const double tiny = std::min(1e-9, 0.5 * (ba - bb));
            if (lab == 0) iv.push_back({std::max(bb, tiny), std::min(ba, th_max)});
            else iv.push_back({std::max(bb, M_PI - th_max), std::min(ba, M_PI - tiny)});
            auto eval = [&](double beta) {
                double la = ba - beta, lb = beta - bb;
                double k = INFINITY;
                if (nA > 0) k = std::min(k, la / nA);
                if (nB > 0) k = std::min(k, lb / nB);
                double sg = std::sin(std::min(beta, M_PI - beta));
                // the corridor opens roughly in proportion to the strip width
                if (sn.corridor > 0) k = std::min(k, 0.1 * sg * sn.corridor_rate / sn.corridor);
                return std::min(k, 0.25 * sg);
            };
            for (auto [lo, hi] : iv) {
                if (lo > hi) continue;
                for (int s = 0; s <= 64; ++s) {
                    double beta = lo + (hi - lo) * s / 64;
                    double sc = eval(beta);
                    if (sc > pl.score) pl.score = sc, pl.beta = beta;
                }
            }
            if (pl.score > best.score) best = std::move(pl);
        }
        if (best.score < 0) {
            // precision ran out: take the widest strip the region still allows
            best.beta = 0.5 * (ba + bb);
            if (best.c.plus_seq.empty()) {
                int vminus = best.beta < M_PI / 2 ? jb.r.b : jb.r.a;
                best.c = grow_chain(mesh, jb.root.first, jb.root.second, jb.tri0, vminus);
                best.wp = weights(best.c.plus_seq);
                best.wm = weights(best.c.minus_seq);
            }
        }
        point d = dir_of(psi + best.beta);
        const chain& c = best.c;
        int vp = c.v0_plus(), vm = c.v0_minus();
        point pplus = dr.pos[vp], pminus = dr.pos[vm];
        frame f = make_frame(pplus, pminus, d);
        point dplus = f.local_dir(vp == jb.r.a ? jb.r.dir_a : jb.r.dir_b);
        point dminus = f.local_dir(vm == jb.r.a ? jb.r.dir_a : jb.r.dir_b);
        double lean_l = std::atan2(-dplus.x, dplus.y), lean_r = std::atan2(dminus.x, dminus.y);
        auto dc = draw_chain_geom(c, pplus, pminus, d, lean_l, lean_r, best.wp, best.wm, p, true);
        for (auto& [v, pt] : dc.positions) {
            if (placed[v]) continue;
            dr.pos[v] = pt;
            placed[v] = 1;
        }
        for (auto e : c.external_edges) long_edges.push_back(e);
        if (keep) {
            out.fragments.push_back(std::move(dc.fragment));
            out.chain_of_fragment.push_back(drawn);
        }
        ++drawn;
        for (auto it = dc.child_regions.rbegin(); it != dc.child_regions.rend(); ++it) {
            int t = beyond(it->first);
            if (t >= 0) stack.push_back({t, it->first, it->second});
        }
    }
    for (int v = 0; v < dr.n; ++v)
        if (!placed[v]) throw error(errc::infeasible_placement, "vertex " + std::to_string(v) + " left unplaced");
    std::sort(long_edges.begin(), long_edges.end());
    dr.edges = g.graph.edges;
    dr.kind.assign(dr.edges.size(), edge_kind::S);
    for (size_t i = 0; i < dr.edges.size(); ++i)
        if (std::binary_search(long_edges.begin(), long_edges.end(), dr.edges[i])) dr.kind[i] = edge_kind::L;
    return out;
}

drawing draw_maximal(const maximal_outerplanar_graph& g, edge e_prime, const layout_params& p) {
    return draw_maximal_traced(g, e_prime, p, false).d;
}

// wedges ---------------------------------------------------------------

double wedge::angle() const {
    point s = base.b - base.a;
    double a1 = std::atan2(cross(s, dir1), dot(s, dir1));
    double a2 = std::atan2(cross(dir2, -1.0 * s), dot(dir2, -1.0 * s));
    return a1 + a2;
}

drawing draw_bipartite_in_wedge(const quadrangulated_graph& q, edge e, const wedge& w, const layout_params& p) {
    const outerplanar_graph& g = q.graph;
    if (!g.is_outer_edge(e.first, e.second)) throw error(errc::edge_not_on_outer_face, "root edge is not outer");
    point s = w.base.b - w.base.a;
    double a1 = std::atan2(cross(s, w.dir1), dot(s, w.dir1));
    double a2 = std::atan2(cross(w.dir2, -1.0 * s), dot(w.dir2, -1.0 * s));
    if (!(a1 > 0 && a2 > 0 && a1 + a2 > M_PI)) throw error(errc::wedge_too_narrow, "wedge angle must exceed pi");
    if (std::fabs(norm(s) - 1) > 1e-6) throw error(errc::invalid_input, "wedge base must have length 1");

    auto faces = g.inner_faces();
    for (const auto& f : faces)
        if (f.size() != 4) throw error(errc::not_quadrangulated, "inner face of length " + std::to_string(f.size()));
    std::map<edge, std::vector<int>> owner;
    for (size_t i = 0; i < faces.size(); ++i)
        for (int k = 0; k < 4; ++k) owner[make_edge(faces[i][k], faces[i][(k + 1) % 4])].push_back((int)i);
    auto other_face = [&](int u, int v, int from) {
        for (int f : owner[make_edge(u, v)])
            if (f != from) return f;
        return -1;
    };
    auto nb_in_face = [&](int f, int v, int not_v) {
        const auto& F = faces[f];
        int k = (int)(std::find(F.begin(), F.end(), v) - F.begin());
        int a = F[(k + 1) % 4], b = F[(k + 3) % 4];
        return a == not_v ? b : a;
    };

    // face tree sizes
    int root = owner[make_edge(e.first, e.second)][0];
    std::vector<int> parent(faces.size(), -2), order;
    parent[root] = -1;
    order.push_back(root);
    for (size_t i = 0; i < order.size(); ++i) {
        int f = order[i];
        for (int k = 0; k < 4; ++k) {
            int nf = other_face(faces[f][k], faces[f][(k + 1) % 4], f);
            if (nf >= 0 && parent[nf] == -2) {
                parent[nf] = f;
                order.push_back(nf);
            }
        }
    }
    std::vector<int> sub(faces.size(), 1);
    for (size_t i = order.size(); i-- > 1;) sub[parent[order[i]]] += sub[order[i]];

    drawing d;
    d.n = g.n;
    d.pos.assign(g.n, {NAN, NAN});
    d.pos[e.first] = w.base.a;
    d.pos[e.second] = w.base.b;
    struct job {
        int f, p1, p2;
        double a1, a2;
    };
    std::vector<job> st{{root, e.first, e.second, a1, a2}};
    while (!st.empty()) {
        job j = st.back();
        st.pop_back();
        int u1 = j.p1, u4 = j.p2;
        int u2 = nb_in_face(j.f, u1, u4), u3 = nb_in_face(j.f, u4, u1);
        int ch[3] = {other_face(u1, u2, j.f), other_face(u2, u3, j.f), other_face(u3, u4, j.f)};
        double eps = j.a1 + j.a2 - M_PI;
        double wt[3], W = 0;
        for (int k = 0; k < 3; ++k) {
            wt[k] = (ch[k] >= 0 ? sub[ch[k]] : 0) + 0.25;
            W += wt[k];
        }
        double e1 = eps * wt[0] / W, e2 = eps * wt[1] / W;
        double beta = j.a1 - e1 - e2 / 2;
        point P1 = d.pos[u1], P4 = d.pos[u4];
        point b = rotate(unit(P4 - P1), beta);
        d.pos[u2] = P1 + b;
        d.pos[u3] = P4 + b;
        if (std::fabs(cross(b, unit(P4 - P1))) < p.eps_num)
            throw error(errc::placement_degenerate, "rhombus collapsed");
        double c3 = eps - e1 - e2 / 2;
        if (ch[2] >= 0) st.push_back({ch[2], u3, u4, M_PI - e2 / 2, c3});
        if (ch[1] >= 0) st.push_back({ch[1], u2, u3, j.a1 - e1, M_PI + e1 + e2 - j.a1});
        if (ch[0] >= 0) st.push_back({ch[0], u1, u2, e1 + e2 / 2, M_PI - e2 / 2});
    }
    d.edges = g.edges;
    d.kind.assign(d.edges.size(), edge_kind::unit);
    return d;
}

pipeline_result draw_pipeline(const outerplanar_graph& g, const layout_params& p) {
    check_params(p);
    pipeline_result r;
    std::vector<int> col;
    try {
        col = bipartition(g);
        r.bipartite = true;
    } catch (const error&) {
        r.bipartite = false;
    }
    if (r.bipartite) {
        auto q = quadrangulate_bipartite(g, col);
        edge e = default_root_edge(q.graph);
        // orient e so the inner face lies on its left
        int a = e.first, b = e.second;
        if ((q.graph.pos[b] - q.graph.pos[a] + g.n) % g.n != 1) std::swap(a, b);
        wedge w{{{0, 0}, {1, 0}}, dir_of(M_PI - 0.05), dir_of(0.05)};
        r.augmented = draw_bipartite_in_wedge(q, {a, b}, w, p);
        r.d = r.augmented.without(q.added_edges);
    } else {
        auto m = triangulate(g);
        auto t = draw_maximal_traced(m, default_root_edge(m.graph), p, true);
        r.augmented = std::move(t.d);
        r.fragments = std::move(t.fragments);
        r.d = r.augmented.without(m.added_edges);
    }
    return r;
}

drawing draw(const outerplanar_graph& g, const layout_params& p) { return draw_pipeline(g, p).d; }

drawing naive_nested_draw(const embedded_graph& g, const layout_params& p) {
    drawing d;
    d.n = g.graph.graph.n;
    d.pos.assign(d.n, {NAN, NAN});
    d.pos[0] = {0, 0};
    d.pos[1] = {1, 0};
    d.pos[2] = {0.5, std::sqrt(3.0) / 2};
    for (const auto& nv : g.face_assignment) {
        point a = d.pos[nv.face[0]], b = d.pos[nv.face[1]], c = d.pos[nv.face[2]];
        if (triangle_area(a, b, c) < p.eps_num * p.eps_num)
            throw error(errc::placement_degenerate, "face area below tolerance");
        point mid = 0.5 * (d.pos[nv.e.first] + d.pos[nv.e.second]);
        point cen = (1.0 / 3) * (a + b + c);
        d.pos[nv.v] = (2.0 / 3) * mid + (1.0 / 3) * cen;
    }
    d.edges = g.graph.graph.edges;
    d.kind.assign(d.edges.size(), edge_kind::unit);
    return d;
}

}  // namespace outerdraw
