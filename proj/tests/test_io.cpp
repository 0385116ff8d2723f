#include <cmath>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "outerdraw/errors.hpp"
#include "outerdraw/generators.hpp"
#include "outerdraw/io.hpp"
#include "outerdraw/layout.hpp"

using namespace outerdraw;

static int count(const std::string& s, const std::string& w) {
    int k = 0;
    for (size_t p = s.find(w); p != std::string::npos; p = s.find(w, p + 1)) ++k;
    return k;
}

TEST_CASE("drawing json round trip is exact") {
    auto g = gen_random_maximal_outerplanar(60, 3);
    auto d = draw(g.graph);
    auto j = drawing_to_json(d);
    auto e = parse_drawing(j);
    REQUIRE(e.n == d.n);
    for (int v = 0; v < d.n; ++v) {
        CHECK(e.pos[v].x == d.pos[v].x);
        CHECK(e.pos[v].y == d.pos[v].y);
    }
    CHECK(e.edges == d.edges);
    CHECK(e.kind == d.kind);
    CHECK(drawing_to_json(e) == j);
}

TEST_CASE("fragment json round trip") {
    auto g = gen_random_maximal_outerplanar(40, 2);
    auto L = draw_maximal_traced(g, default_root_edge(g.graph));
    auto j = fragments_to_json(L.fragments);
    auto fs = parse_fragments(j);
    REQUIRE(fs.size() == L.fragments.size());
    for (size_t i = 0; i < fs.size(); ++i) {
        CHECK(fs[i].root == L.fragments[i].root);
        CHECK(fs[i].vertices == L.fragments[i].vertices);
        CHECK(fs[i].edges == L.fragments[i].edges);
        CHECK(fs[i].external == L.fragments[i].external);
        CHECK(fs[i].d.x == L.fragments[i].d.x);
        for (size_t k = 0; k < fs[i].pts.size(); ++k) CHECK(fs[i].pts[k].y == L.fragments[i].pts[k].y);
    }
    CHECK(fragments_to_json(fs) == j);
}

TEST_CASE("svg of a rhombus") {
    auto d = draw_pipeline(th::cycle(4)).d;
    auto s = render_svg(d);
    CHECK(s.rfind("<svg", 0) == 0);
    CHECK(count(s, "viewBox=") == 1);
    CHECK(count(s, "<line ") == 4);
    CHECK(count(s, "<circle ") == 4);
    CHECK(count(s, "</svg>") == 1);
}

TEST_CASE("output is deterministic") {
    auto g = gen_random_maximal_outerplanar(200, 8);
    auto a = draw(g.graph), b = draw(g.graph);
    CHECK(drawing_to_json(a) == drawing_to_json(b));
    CHECK(render_svg(a) == render_svg(b));
}

TEST_CASE("graph parsing") {
    auto p = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(p.n == 4);
    CHECK(p.edges.size() == 4);
    auto j = parse_graph(R"({"n":3,"edges":[[0,1],[1,2],[2,0]],"outer_cycle":[0,1,2]})");
    CHECK(j.n == 3);
    CHECK(j.outer_cycle == std::vector<int>{0, 1, 2});
    auto g = recognize_outerplanar(p.n, p.edges);
    auto back = parse_graph(graph_to_json(g));
    CHECK(back.edges == g.edges);
    CHECK(back.outer_cycle == g.outer_cycle);
    CHECK_THROWS_AS(parse_graph("{\"n\":3"), error);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), error);
}

TEST_CASE("nested graph round trip") {
    auto g = gen_nested_family(3);
    auto back = nested_from_input(parse_graph(nested_to_json(g)));
    CHECK(back.graph.graph.n == g.graph.graph.n);
    CHECK(back.face_assignment.size() == g.face_assignment.size());
    CHECK(drawing_to_json(naive_nested_draw(back)) == drawing_to_json(naive_nested_draw(g)));
}

TEST_CASE("doubles print with 17 digits") {
    CHECK(std::stod(fmt_double(0.1)) == 0.1);
    CHECK(std::stod(fmt_double(M_PI)) == M_PI);
}
