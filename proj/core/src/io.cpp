#include "outerdraw/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"
#include "outerdraw/errors.hpp"

namespace outerdraw {

using nlohmann::json;

std::string fmt_double(double x) {
    if (x == 0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

edge read_edge(const json& j) {
    if (!j.is_array() || j.size() != 2) throw error(errc::invalid_input, "edge must be a pair");
    return {j[0].get<int>(), j[1].get<int>()};
}

graph_input parse_plain(const std::string& text) {
    std::istringstream in(text);
    graph_input g;
    long long n, m;
    if (!(in >> n >> m) || n < 0 || m < 0) throw error(errc::invalid_input, "expected 'n m' header");
    g.n = (int)n;
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw error(errc::invalid_input, "truncated edge list");
        g.edges.push_back({u, v});
    }
    return g;
}

std::string edge_key(edge e) { return std::to_string(e.first) + "-" + std::to_string(e.second); }

}  // namespace

graph_input parse_graph(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw error(errc::invalid_input, "empty input");
    if (text[first] != '{') return parse_plain(text);
    graph_input g;
    try {
        json j = json::parse(text);
        g.n = j.at("n").get<int>();
        for (const auto& e : j.at("edges")) g.edges.push_back(read_edge(e));
        if (j.contains("outer_cycle")) g.outer_cycle = j["outer_cycle"].get<std::vector<int>>();
        if (j.contains("levels")) g.levels = j["levels"].get<int>();
        if (j.contains("face_assignment")) {
            for (const auto& f : j["face_assignment"]) {
                nested_vertex nv;
                nv.v = f.at("v").get<int>();
                nv.e = read_edge(f.at("edge"));
                auto fc = f.at("face").get<std::vector<int>>();
                if (fc.size() != 3) throw error(errc::invalid_input, "face must have 3 vertices");
                nv.face = {fc[0], fc[1], fc[2]};
                nv.level = f.value("level", 0);
                g.face_assignment.push_back(nv);
            }
        }
    } catch (const json::exception& e) {
        throw error(errc::invalid_input, std::string("bad graph json: ") + e.what());
    }
    return g;
}

std::string graph_to_json(const outerplanar_graph& g) {
    std::ostringstream o;
    o << "{\"n\":" << g.n << ",\"edges\":[";
    for (size_t i = 0; i < g.edges.size(); ++i)
        o << (i ? "," : "") << "[" << g.edges[i].first << "," << g.edges[i].second << "]";
    o << "],\"outer_cycle\":[";
    for (size_t i = 0; i < g.outer_cycle.size(); ++i) o << (i ? "," : "") << g.outer_cycle[i];
    o << "]}\n";
    return o.str();
}

std::string nested_to_json(const embedded_graph& g) {
    std::string base = graph_to_json(g.graph.graph);
    base.pop_back();  // newline
    base.pop_back();  // closing brace
    std::ostringstream o;
    o << base << ",\"levels\":" << g.levels << ",\"face_assignment\":[";
    for (size_t i = 0; i < g.face_assignment.size(); ++i) {
        const auto& f = g.face_assignment[i];
        o << (i ? "," : "") << "{\"v\":" << f.v << ",\"edge\":[" << f.e.first << "," << f.e.second << "],\"face\":["
          << f.face[0] << "," << f.face[1] << "," << f.face[2] << "],\"level\":" << f.level << "}";
    }
    o << "]}\n";
    return o.str();
}

embedded_graph nested_from_input(const graph_input& in) {
    if (in.face_assignment.empty()) throw error(errc::not_nested_family, "graph has no face_assignment");
    int levels = in.levels;
    for (const auto& f : in.face_assignment) levels = std::max(levels, f.level);
    auto ref = gen_nested_family(levels, std::max(20, levels));
    embedded_graph g;
    g.graph.graph = recognize_outerplanar(in.n, in.edges, in.outer_cycle);
    g.levels = levels;
    g.face_assignment = in.face_assignment;
    if (ref.graph.graph.n != in.n || ref.graph.graph.edges != g.graph.graph.edges)
        throw error(errc::not_nested_family, "graph is not the nested family of that level");
    for (size_t i = 0; i < g.face_assignment.size(); ++i) {
        const auto& a = g.face_assignment[i];
        const auto& b = ref.face_assignment[i];
        if (a.v != b.v || make_edge(a.e.first, a.e.second) != b.e || a.face != b.face)
            throw error(errc::not_nested_family, "face_assignment differs from the nested family");
    }
    g.distinguished_edges = ref.distinguished_edges;
    return g;
}

std::string drawing_to_json(const drawing& d) {
    std::ostringstream o;
    o << "{\"vertices\":[";
    for (int v = 0; v < d.n; ++v)
        o << (v ? "," : "") << "{\"id\":" << v << ",\"x\":" << fmt_double(d.pos[v].x)
          << ",\"y\":" << fmt_double(d.pos[v].y) << "}";
    o << "],\"edges\":[";
    for (size_t i = 0; i < d.edges.size(); ++i)
        o << (i ? "," : "") << "[" << d.edges[i].first << "," << d.edges[i].second << "]";
    o << "],\"edge_class\":{";
    for (size_t i = 0; i < d.edges.size(); ++i)
        o << (i ? "," : "") << "\"" << edge_key(d.edges[i]) << "\":\"" << edge_kind_name(d.kind[i]) << "\"";
    o << "}}\n";
    return o.str();
}

drawing parse_drawing(const std::string& text) {
    drawing d;
    try {
        json j = json::parse(text);
        const auto& vs = j.at("vertices");
        d.n = (int)vs.size();
        d.pos.assign(d.n, {NAN, NAN});
        for (const auto& v : vs) {
            int id = v.at("id").get<int>();
            if (id < 0 || id >= d.n) throw error(errc::invalid_input, "vertex id out of range");
            d.pos[id] = {v.at("x").get<double>(), v.at("y").get<double>()};
        }
        for (const auto& e : j.at("edges")) {
            edge x = read_edge(e);
            if (x.first < 0 || x.second < 0 || x.first >= d.n || x.second >= d.n || x.first == x.second)
                throw error(errc::invalid_input, "bad edge");
            d.edges.push_back(make_edge(x.first, x.second));
        }
        std::sort(d.edges.begin(), d.edges.end());
        d.edges.erase(std::unique(d.edges.begin(), d.edges.end()), d.edges.end());
        d.kind.assign(d.edges.size(), edge_kind::unit);
        if (j.contains("edge_class")) {
            const auto& ec = j["edge_class"];
            for (size_t i = 0; i < d.edges.size(); ++i) {
                auto it = ec.find(edge_key(d.edges[i]));
                if (it == ec.end()) continue;
                auto s = it->get<std::string>();
                d.kind[i] = s == "L" ? edge_kind::L : s == "S" ? edge_kind::S : edge_kind::unit;
            }
        }
    } catch (const json::exception& e) {
        throw error(errc::invalid_input, std::string("bad drawing json: ") + e.what());
    }
    for (const auto& p : d.pos)
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw error(errc::invalid_input, "missing vertex coordinates");
    return d;
}

std::string chain_tree_to_json(const chain_tree& t) {
    auto edges = [](std::ostringstream& o, const std::vector<edge>& es) {
        o << "[";
        for (size_t i = 0; i < es.size(); ++i) o << (i ? "," : "") << "[" << es[i].first << "," << es[i].second << "]";
        o << "]";
    };
    auto ints = [](std::ostringstream& o, const std::vector<int>& xs) {
        o << "[";
        for (size_t i = 0; i < xs.size(); ++i) o << (i ? "," : "") << xs[i];
        o << "]";
    };
    std::ostringstream o;
    o << "{\"root\":" << t.root << ",\"chains\":[";
    for (size_t i = 0; i < t.chains.size(); ++i) {
        const chain& c = t.chains[i];
        o << (i ? "," : "") << "{\"id\":" << i << ",\"parent\":" << t.parent[i] << ",\"root_edge\":["
          << c.root_edge.first << "," << c.root_edge.second << "],\"triangles\":";
        ints(o, c.triangles);
        o << ",\"labels\":{";
        for (size_t k = 0; k < c.labels.size(); ++k)
            o << (k ? "," : "") << "\"" << c.labels[k].first << "\":" << c.labels[k].second;
        o << "},\"external_edges\":";
        edges(o, c.external_edges);
        o << ",\"short_edges\":";
        edges(o, c.short_edges);
        o << ",\"children\":";
        ints(o, t.children[i]);
        o << "}";
    }
    o << "],\"L\":";
    edges(o, t.long_edges);
    o << ",\"S\":";
    edges(o, t.short_edges);
    o << "}\n";
    return o.str();
}

std::string fragments_to_json(const std::vector<strip_fragment>& fs) {
    auto pt = [](std::ostringstream& o, point p) { o << "[" << fmt_double(p.x) << "," << fmt_double(p.y) << "]"; };
    auto edges = [](std::ostringstream& o, const std::vector<edge>& es) {
        o << "[";
        for (size_t i = 0; i < es.size(); ++i) o << (i ? "," : "") << "[" << es[i].first << "," << es[i].second << "]";
        o << "]";
    };
    std::ostringstream o;
    o << "{\"fragments\":[";
    for (size_t i = 0; i < fs.size(); ++i) {
        const auto& f = fs[i];
        o << (i ? "," : "") << "{\"root\":[" << f.root.first << "," << f.root.second << "],\"s0\":";
        pt(o, f.s0);
        o << ",\"s1\":";
        pt(o, f.s1);
        o << ",\"d\":";
        pt(o, f.d);
        o << ",\"vertices\":[";
        for (size_t k = 0; k < f.vertices.size(); ++k) {
            o << (k ? "," : "") << "{\"id\":" << f.vertices[k] << ",\"x\":" << fmt_double(f.pts[k].x)
              << ",\"y\":" << fmt_double(f.pts[k].y) << "}";
        }
        o << "],\"edges\":";
        edges(o, f.edges);
        o << ",\"external\":";
        edges(o, f.external);
        o << "}";
    }
    o << "]}\n";
    return o.str();
}

std::vector<strip_fragment> parse_fragments(const std::string& text) {
    std::vector<strip_fragment> out;
    auto pt = [](const json& j) {
        if (!j.is_array() || j.size() != 2) throw error(errc::invalid_input, "point must be a pair");
        return point{j[0].get<double>(), j[1].get<double>()};
    };
    try {
        json j = json::parse(text);
        for (const auto& jf : j.at("fragments")) {
            strip_fragment f;
            edge r = read_edge(jf.at("root"));
            f.root = make_edge(r.first, r.second);
            f.s0 = pt(jf.at("s0"));
            f.s1 = pt(jf.at("s1"));
            f.d = pt(jf.at("d"));
            for (const auto& v : jf.at("vertices")) {
                f.vertices.push_back(v.at("id").get<int>());
                f.pts.push_back({v.at("x").get<double>(), v.at("y").get<double>()});
            }
            for (const auto& e : jf.at("edges")) {
                edge x = read_edge(e);
                f.edges.push_back(make_edge(x.first, x.second));
            }
            for (const auto& e : jf.at("external")) {
                edge x = read_edge(e);
                f.external.push_back(make_edge(x.first, x.second));
            }
            out.push_back(std::move(f));
        }
    } catch (const json::exception& e) {
        throw error(errc::invalid_input, std::string("bad certificate json: ") + e.what());
    }
    return out;
}

std::string render_svg(const drawing& d, double scale) {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    for (int v = 0; v < d.n; ++v) {
        point p = d.pos[v];
        if (v == 0) x0 = x1 = p.x, y0 = y1 = p.y;
        x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
    }
    double w = (x1 - x0) * scale, h = (y1 - y0) * scale;
    double mx = std::max(w, 1.0) * 0.05, my = std::max(h, 1.0) * 0.05;
    // svg y grows downward
    auto X = [&](double x) { return fmt_double((x - x0) * scale); };
    auto Y = [&](double y) { return fmt_double((y1 - y) * scale); };
    double r = 0.04 * scale;
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt_double(-mx) << " " << fmt_double(-my) << " "
      << fmt_double(w + 2 * mx) << " " << fmt_double(h + 2 * my) << "\">\n";
    for (size_t i = 0; i < d.edges.size(); ++i) {
        point a = d.pos[d.edges[i].first], b = d.pos[d.edges[i].second];
        bool s = d.kind[i] == edge_kind::S;
        o << "<line x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x) << "\" y2=\"" << Y(b.y)
          << "\" class=\"" << edge_kind_name(d.kind[i]) << "\" stroke=\"" << (s ? "#888888" : "#1f4e9c")
          << "\" stroke-width=\"" << fmt_double(s ? 0.01 * scale : 0.02 * scale) << "\""
          << (s ? " stroke-dasharray=\"4 2\"" : "") << "/>\n";
    }
    for (int v = 0; v < d.n; ++v) {
        o << "<circle cx=\"" << X(d.pos[v].x) << "\" cy=\"" << Y(d.pos[v].y) << "\" r=\"" << fmt_double(r)
          << "\" fill=\"white\" stroke=\"black\"/>\n";
        o << "<text x=\"" << X(d.pos[v].x) << "\" y=\"" << Y(d.pos[v].y) << "\" font-size=\"" << fmt_double(r)
          << "\" text-anchor=\"middle\" dominant-baseline=\"central\">" << v << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace outerdraw
