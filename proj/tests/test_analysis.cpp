#include <cmath>
#include <random>

#include "doctest.h"
#include "outerdraw/analysis.hpp"
#include "outerdraw/errors.hpp"
#include "outerdraw/generators.hpp"
#include "outerdraw/layout.hpp"
#include "outerdraw/validation.hpp"

using namespace outerdraw;

// 40-digit reference values
constexpr double half_345 = 8.683281572999747636;    // 6 + sqrt(7.2)
constexpr double shrink_345 = 3.316718427000252364;  // 6 - sqrt(7.2)
constexpr double half_eq = 2.3660254037844386;       // 3/2 + sqrt(3)/2
constexpr double shrink_eq = 0.6339745962155614;

TEST_CASE("bisector of the 3-4-5 triangle") {
    auto r = perimeter_bisector({0, 0}, {5, 0}, {3.2, 2.4});
    CHECK(r.D.x == doctest::Approx(2).epsilon(1e-14));
    CHECK(std::fabs(r.D.y) < 1e-14);
    CHECK(r.p_left == doctest::Approx(half_345).epsilon(1e-14));
    CHECK(r.p_right == doctest::Approx(half_345).epsilon(1e-14));
    CHECK(12 - r.p_left == doctest::Approx(shrink_345).epsilon(1e-13));
}

TEST_CASE("bisector of the unit equilateral triangle") {
    auto r = perimeter_bisector({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2});
    CHECK(r.D.x == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.p_left == doctest::Approx(half_eq).epsilon(1e-14));
    CHECK(3 - r.p_right == doctest::Approx(shrink_eq).epsilon(1e-13));
}

TEST_CASE("bisector halves the perimeter of random triangles") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-10, 10);
    int done = 0;
    while (done < 1000) {
        point A{U(rng), U(rng)}, B{U(rng), U(rng)}, C{U(rng), U(rng)};
        if (triangle_area(A, B, C) < 1e-3) continue;
        ++done;
        auto r = perimeter_bisector(A, B, C);
        double P = dist(A, B) + dist(B, C) + dist(C, A);
        CHECK(r.p_left == doctest::Approx(r.p_right).epsilon(1e-9));
        CHECK(r.p_left < P);
        // D on segment AB
        CHECK(std::fabs(dist(A, r.D) + dist(r.D, B) - dist(A, B)) < 1e-9);
        CHECK(P - r.p_left > 0);
    }
    CHECK_THROWS_AS(perimeter_bisector({0, 0}, {1, 0}, {2, 0}), error);
}

TEST_CASE("descent audit on the naive nested drawings") {
    auto g1 = gen_nested_family(1);
    auto d1 = naive_nested_draw(g1);
    double rho = edge_length_ratio(d1).ratio;
    auto r = perimeter_descent_audit(d1, g1, rho);
    REQUIRE(!r.steps.empty());
    CHECK(r.steps[0].perimeter <= 3 * rho + 1e-12);
    CHECK(r.strictly_decreasing);
    for (const auto& s : r.steps)
        if (s.bisected) {
            CHECK(s.shrink >= r.min_edge / 2 - 1e-9);
            CHECK(s.certified);
        }
    for (int n = 2; n <= 6; ++n) {
        auto g = gen_nested_family(n);
        auto d = naive_nested_draw(g);
        auto a = perimeter_descent_audit(d, g, edge_length_ratio(d).ratio);
        CHECK(a.strictly_decreasing);
        CHECK(!a.contradiction);
        CHECK(a.steps.size() >= 2);
    }
}

TEST_CASE("descent audit rejects mismatched input") {
    auto g2 = gen_nested_family(2);
    CHECK_THROWS_AS(perimeter_descent_audit(draw(g2.graph.graph), g2, 2), error);
    CHECK_THROWS_AS(perimeter_descent_audit(naive_nested_draw(g2), g2, 0.5), error);
}
