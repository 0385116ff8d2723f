#include <cmath>
#include <random>

#include "doctest.h"
#include "outerdraw/errors.hpp"
#include "outerdraw/generators.hpp"
#include "outerdraw/graph.hpp"

using namespace outerdraw;

// values from 40-digit evaluation
constexpr double area_sixth = 0.22047927592204921588;  // sqrt(7)/12
constexpr double k_bound_half = 56.995699762738845542;  // 8 pi / sqrt(7/36)

static double heron(double a, double b, double c) {
    double s = (a + b + c) / 2;
    return std::sqrt(s * (s - a) * (s - b) * (s - c));
}

TEST_CASE("fan pendant sizes") {
    auto g1 = gen_fan_pendant(1);
    CHECK(g1.graph.n == 6);
    CHECK(g1.graph.edges.size() == 9);
    CHECK(g1.graph.inner_faces().size() == 4);
    auto g8 = gen_fan_pendant(8);
    CHECK(g8.graph.n == 20);
    CHECK(g8.graph.outer_cycle.size() == 20);
    CHECK_THROWS_AS(gen_fan_pendant(0), error);
}

TEST_CASE("nested family sizes") {
    auto g0 = gen_nested_family(0);
    CHECK(g0.graph.graph.n == 3);
    CHECK(g0.distinguished_edges.size() == 2);
    auto g1 = gen_nested_family(1);
    CHECK(g1.graph.graph.n == 5);
    for (int n = 0; n <= 8; ++n) {
        auto g = gen_nested_family(n);
        CHECK(g.graph.graph.n == (1 << (n + 1)) + 1);
        CHECK(g.distinguished_edges.size() == (size_t)(1 << (n + 1)));
    }
    CHECK(gen_nested_family(3).graph.graph.n == 17);
    CHECK(gen_nested_family(3).distinguished_edges.size() == 16);
}

TEST_CASE("random maximal outerplanar") {
    auto t = gen_random_maximal_outerplanar(3, 1);
    CHECK(t.graph.n == 3);
    CHECK(t.graph.edges.size() == 3);
    auto g = gen_random_maximal_outerplanar(10, 42);
    CHECK(g.graph.edges.size() == 17);
    CHECK_NOTHROW(recognize_outerplanar(g.graph.n, g.graph.edges));
    auto h = gen_random_maximal_outerplanar(10, 42);
    CHECK(g.graph.edges == h.graph.edges);
    CHECK(g.graph.outer_cycle == h.graph.outer_cycle);
    for (int n : {4, 17, 200}) {
        auto r = gen_random_maximal_outerplanar(n, 9);
        CHECK(r.graph.edges.size() == (size_t)(2 * n - 3));
        CHECK(recognize_outerplanar(n, r.graph.edges).outer_cycle.size() == (size_t)n);
    }
}

TEST_CASE("random bipartite outerplanar is bipartite with even faces") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto b = gen_random_bipartite_outerplanar(20, s);
        CHECK_NOTHROW(bipartition(b));
        for (auto& f : b.inner_faces()) CHECK(f.size() % 2 == 0);
    }
}

TEST_CASE("min triangle area") {
    CHECK(min_triangle_area(1.0 / 6) == doctest::Approx(area_sixth).epsilon(1e-12));
    CHECK(min_triangle_area(1.0 / 6) == doctest::Approx(std::sqrt(7.0) / 12).epsilon(1e-12));
    CHECK(min_triangle_area(1e-12) < 1e-5);
    CHECK_THROWS_AS(min_triangle_area(0), error);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(1e-6, 0.5);
    for (int i = 0; i < 100; ++i) {
        double d = U(rng);
        CHECK(min_triangle_area(d) == doctest::Approx(heron(1, 0.5 + d, 0.5 + d)).epsilon(1e-9));
    }
}

TEST_CASE("required k") {
    CHECK(required_k(0.5) == 57);
    CHECK(required_k(0.5) == (long long)std::floor(k_bound_half) + 1);
    long long prev = required_k(0.01);
    for (double e = 0.02; e < 2; e += 0.01) {
        long long k = required_k(e);
        CHECK(k >= 1);
        CHECK(k <= prev);
        prev = k;
    }
    CHECK_THROWS_AS(required_k(0), error);
    CHECK_THROWS_AS(required_k(2), error);
}
