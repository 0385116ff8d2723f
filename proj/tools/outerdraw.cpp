#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "outerdraw/analysis.hpp"
#include "outerdraw/decomposition.hpp"
#include "outerdraw/errors.hpp"
#include "outerdraw/generators.hpp"
#include "outerdraw/graph.hpp"
#include "outerdraw/io.hpp"
#include "outerdraw/layout.hpp"
#include "outerdraw/validation.hpp"

using namespace outerdraw;
using ojson = nlohmann::ordered_json;

namespace {

enum exit_code { ok = 0, usage = 1, not_outerplanar = 2, invalid = 3, infeasible = 4 };

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::invalid_input, "cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::invalid_input, "cannot write " + path);
    out << text;
}

int code_of(errc c) {
    switch (c) {
    case errc::not_outerplanar:
    case errc::not_biconnected:
    case errc::not_bipartite:
        return not_outerplanar;
    case errc::infeasible_placement:
    case errc::wedge_too_narrow:
    case errc::placement_degenerate:
        return infeasible;
    case errc::embedding_violated:
        return invalid;
    default:
        return usage;
    }
}

ojson edge_json(edge e) { return ojson::array({e.first, e.second}); }

ojson crossings_json(const std::vector<crossing>& cs) {
    ojson a = ojson::array();
    for (const auto& c : cs) a.push_back({{"edges", {edge_json(c.a), edge_json(c.b)}}, {"at", {c.at.x, c.at.y}}});
    return a;
}

struct opts {
    std::string input, output, drawing_path, cert_path, embedding_path, graph_path, format = "json", family;
    double scale = 100, rho_star = 0;
    int k = 8, n = 10;
    std::uint64_t seed = 0;
    std::vector<int> root;
    layout_params p;
};

int run_generate(const opts& o) {
    std::string out;
    if (o.family == "fan-pendant") out = graph_to_json(gen_fan_pendant(o.k).graph);
    else if (o.family == "nested") out = nested_to_json(gen_nested_family(o.n));
    else if (o.family == "random") out = graph_to_json(gen_random_maximal_outerplanar(o.n, o.seed).graph);
    else if (o.family == "bipartite") out = graph_to_json(gen_random_bipartite_outerplanar(o.n, o.seed));
    else throw error(errc::invalid_input, "unknown family " + o.family);
    emit(o.output, out);
    return ok;
}

int run_draw(const opts& o) {
    auto in = parse_graph(slurp(o.input));
    auto g = recognize_outerplanar(in.n, in.edges, in.outer_cycle);
    pipeline_result r;
    if (!o.root.empty()) {
        auto m = triangulate(g);
        auto t = draw_maximal_traced(m, make_edge(o.root[0], o.root[1]), o.p, true);
        r.augmented = t.d;
        r.d = t.d.without(m.added_edges);
        r.fragments = std::move(t.fragments);
    } else {
        r = draw_pipeline(g, o.p);
    }
    emit(o.output, o.format == "svg" ? render_svg(r.d, o.scale) : drawing_to_json(r.d));
    if (!o.cert_path.empty()) emit(o.cert_path, fragments_to_json(r.fragments));
    auto q = edge_length_ratio(r.d);
    std::cerr << "ratio " << fmt_double(q.ratio) << " min " << fmt_double(q.min_len) << " max "
              << fmt_double(q.max_len) << (r.bipartite ? " bipartite" : "") << "\n";
    return ok;
}

int run_validate(const opts& o) {
    auto d = parse_drawing(slurp(o.drawing_path));
    ojson rep;
    auto cs = find_crossings(d);
    auto q = edge_length_ratio(d);
    ojson fails = ojson::array();
    if (!o.cert_path.empty()) {
        auto fs = parse_fragments(slurp(o.cert_path));
        for (size_t i = 0; i < fs.size(); ++i)
            for (const auto& f : check_strip_certificate(fs[i], o.p.eps_num, o.p.guard).failures)
                fails.push_back("fragment " + std::to_string(i) + ": " + f);
    }
    if (!o.embedding_path.empty()) {
        auto in = parse_graph(slurp(o.embedding_path));
        auto er = check_embedding_preserved(d, in.face_assignment);
        for (int v : er.misplaced) fails.push_back("embedding: vertex " + std::to_string(v) + " outside its face");
    }
    bool good = cs.empty() && fails.empty() && std::isfinite(q.ratio);
    rep["ok"] = good;
    rep["ratio"] = q.ratio;
    rep["min_edge"] = {{"edge", edge_json(q.min_edge)}, {"length", q.min_len}};
    rep["max_edge"] = {{"edge", edge_json(q.max_edge)}, {"length", q.max_len}};
    rep["crossings"] = crossings_json(cs);
    rep["condition_failures"] = fails;
    std::cout << rep.dump() << "\n";
    std::cerr << (good ? "ok" : "invalid") << " ratio " << fmt_double(q.ratio) << "\n";
    return good ? ok : invalid;
}

int run_ratio(const opts& o) {
    auto d = parse_drawing(slurp(o.drawing_path));
    auto cs = find_crossings(d);
    auto q = edge_length_ratio(d);
    std::cout << fmt_double(q.ratio) << "\n";
    if (!cs.empty()) {
        std::cerr << cs.size() << " crossing(s)\n";
        for (const auto& c : cs)
            std::cerr << "  " << c.a.first << "-" << c.a.second << " x " << c.b.first << "-" << c.b.second << " at "
                      << fmt_double(c.at.x) << " " << fmt_double(c.at.y) << "\n";
        return invalid;
    }
    return ok;
}

int run_decompose(const opts& o) {
    auto in = parse_graph(slurp(o.input));
    auto g = recognize_outerplanar(in.n, in.edges, in.outer_cycle);
    auto m = triangulate(g);
    edge e = o.root.empty() ? default_root_edge(m.graph) : make_edge(o.root[0], o.root[1]);
    emit(o.output, chain_tree_to_json(chain_decompose(m, e)));
    return ok;
}

int run_audit(const opts& o) {
    auto g = nested_from_input(parse_graph(slurp(o.graph_path)));
    drawing d = o.drawing_path.empty() ? naive_nested_draw(g, o.p) : parse_drawing(slurp(o.drawing_path));
    auto er = check_embedding_preserved(d, g.face_assignment);
    if (!er.ok) throw error(errc::embedding_violated, "drawing does not preserve the nested embedding");
    double rho = o.rho_star > 0 ? o.rho_star : edge_length_ratio(d).ratio;
    auto rep = perimeter_descent_audit(d, g, rho, o.p.eps_num);
    ojson steps = ojson::array();
    for (const auto& s : rep.steps)
        steps.push_back({{"triangle", s.tri}, {"perimeter", s.perimeter}, {"shrink", s.shrink},
                         {"bisected", s.bisected}, {"certified", s.certified}});
    ojson j;
    j["rho_star"] = rep.rho_star;
    j["min_edge"] = rep.min_edge;
    j["certified_steps"] = rep.certified_steps;
    j["bound_steps"] = rep.bound_steps;
    j["strictly_decreasing"] = rep.strictly_decreasing;
    j["contradiction"] = rep.contradiction;
    j["steps"] = steps;
    emit(o.output, j.dump() + "\n");
    std::cerr << rep.steps.size() << " steps, " << rep.certified_steps << " certified, perimeters "
              << (rep.strictly_decreasing ? "strictly decreasing" : "NOT decreasing") << "\n";
    return rep.strictly_decreasing ? ok : invalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"outerdraw: planar drawings of outerplanar graphs with edge-length ratio below 2"};
    app.require_subcommand(1);
    opts o;

    auto add_params = [&](CLI::App* s) {
        s->add_option("--leg", o.p.leg_length, "leg length of a lone triangle, in (1/2, 1)");
        s->add_option("--mu", o.p.mu, "margin asked of short edges when affordable");
        s->add_option("--ray-rotation", o.p.ray_rotation, "fixed ray rotation, 0 picks one per chain");
        s->add_option("--eps", o.p.eps_num, "numeric tolerance");
    };

    auto* gen = app.add_subcommand("generate", "emit a graph as JSON");
    gen->add_option("--family", o.family, "fan-pendant | nested | random | bipartite")->required();
    gen->add_option("--k", o.k, "fan size for fan-pendant");
    gen->add_option("--n", o.n, "vertex count, or level for nested");
    gen->add_option("--seed", o.seed, "random seed");
    gen->add_option("-o,--output", o.output, "output file, default stdout");

    auto* drw = app.add_subcommand("draw", "draw a graph; ratio report on stderr");
    drw->add_option("input", o.input, "graph file (JSON or 'n m' edge list), default stdin");
    drw->add_option("-o,--output", o.output, "output file, default stdout");
    drw->add_option("--format", o.format, "json | svg")->check(CLI::IsMember({"json", "svg"}));
    drw->add_option("--scale", o.scale, "svg units per unit length")->check(CLI::PositiveNumber);
    drw->add_option("--cert", o.cert_path, "write per-chain strip certificates here");
    drw->add_option("--root", o.root, "root edge u v (non-bipartite input)")->expected(2);
    add_params(drw);

    auto* val = app.add_subcommand("validate", "check a drawing; exit 0 iff ok");
    val->add_option("--drawing", o.drawing_path, "drawing JSON, default stdin");
    val->add_option("--strip-cert", o.cert_path, "certificates written by draw --cert");
    val->add_option("--embedding", o.embedding_path, "graph JSON with face_assignment");
    add_params(val);

    auto* rat = app.add_subcommand("ratio", "print the edge-length ratio; exit 3 on crossings");
    rat->add_option("--drawing", o.drawing_path, "drawing JSON, default stdin");

    auto* dec = app.add_subcommand("decompose", "chain decomposition as JSON");
    dec->add_option("input", o.input, "graph file, default stdin");
    dec->add_option("-o,--output", o.output, "output file, default stdout");
    dec->add_option("--root", o.root, "root edge u v")->expected(2);

    auto* aud = app.add_subcommand("audit", "perimeter descent audit of a nested-family drawing");
    aud->add_option("--graph", o.graph_path, "nested family JSON from generate --family nested")->required();
    aud->add_option("--drawing", o.drawing_path, "drawing JSON, default the naive nested drawing");
    aud->add_option("--rho-star", o.rho_star, "assumed ratio bound, default the measured ratio");
    aud->add_option("-o,--output", o.output, "output file, default stdout");
    add_params(aud);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        check_params(o.p);
        if (*gen) return run_generate(o);
        if (*drw) return run_draw(o);
        if (*val) return run_validate(o);
        if (*rat) return run_ratio(o);
        if (*dec) return run_decompose(o);
        if (*aud) return run_audit(o);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return code_of(e.code);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
