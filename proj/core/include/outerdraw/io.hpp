#pragma once

#include <string>
#include <vector>

#include "outerdraw/decomposition.hpp"
#include "outerdraw/drawing.hpp"
#include "outerdraw/generators.hpp"
#include "outerdraw/validation.hpp"

namespace outerdraw {

struct graph_input {
    int n = 0;
    std::vector<edge> edges;
    std::vector<int> outer_cycle;
    std::vector<nested_vertex> face_assignment;  // nested family only
    int levels = 0;
};

// JSON object or plain text "n m" followed by m lines "u v"
graph_input parse_graph(const std::string& text);
std::string graph_to_json(const outerplanar_graph& g);
std::string nested_to_json(const embedded_graph& g);
embedded_graph nested_from_input(const graph_input& in);

std::string drawing_to_json(const drawing& d);
drawing parse_drawing(const std::string& text);

std::string chain_tree_to_json(const chain_tree& t);

std::string fragments_to_json(const std::vector<strip_fragment>& fs);
std::vector<strip_fragment> parse_fragments(const std::string& text);
std::string render_svg(const drawing& d, double scale = 100);

std::string fmt_double(double x);  // 17 significant digits

}  // namespace outerdraw
