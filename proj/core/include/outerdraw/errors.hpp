#pragma once

#include <stdexcept>
#include <string>

namespace outerdraw {

enum class errc {
    invalid_input,
    not_outerplanar,
    not_biconnected,
    empty_or_trivial,
    not_bipartite,
    edge_not_on_outer_face,
    angle_too_large,
    infeasible_placement,
    wedge_too_narrow,
    not_quadrangulated,
    placement_degenerate,
    size_limit,
    non_positive_delta,
    epsilon_out_of_range,
    degenerate_triangle,
    embedding_violated,
    not_nested_family,
    zero_length_edge,
    not_fan_pendant,
};

const char* errc_name(errc c);

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

}  // namespace outerdraw
