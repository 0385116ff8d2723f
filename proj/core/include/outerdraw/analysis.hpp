#pragma once

#include <array>
#include <vector>

#include "outerdraw/drawing.hpp"
#include "outerdraw/generators.hpp"

namespace outerdraw {

struct bisector_result {
    point D;
    double p_left = 0;   // perimeter of CDA
    double p_right = 0;  // perimeter of CBD
};

// cevian from C to D on AB splitting the perimeter in half
bisector_result perimeter_bisector(point A, point B, point C);

struct descent_step {
    std::array<int, 3> tri;  // vertex ids, apex last
    double perimeter = 0;
    double shrink = 0;       // perimeter minus the selected half; 0 for a plain descent
    bool bisected = false;
    bool certified = false;  // shrink >= 1/(2 rho*)
};

struct descent_report {
    std::vector<descent_step> steps;
    double rho_star = 1;
    double min_edge = 1;  // 1/rho*
    int certified_steps = 0;
    long long bound_steps = 0;  // ceil(3 rho* * 2 rho*)
    bool contradiction = false;
    bool strictly_decreasing = true;
};

descent_report perimeter_descent_audit(const drawing& d, const embedded_graph& g, double rho_star,
                                       double eps_num = 1e-9);

}  // namespace outerdraw
