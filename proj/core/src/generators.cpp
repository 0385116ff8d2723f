#include "outerdraw/generators.hpp"

#include <cmath>
#include <map>
#include <random>

#include "outerdraw/errors.hpp"

namespace outerdraw {

namespace {

// unbiased value in [0, range), same on every platform
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do x = rng(); while (x >= limit);
    return x % range;
}

std::vector<edge> cycle_edges(int n) {
    std::vector<edge> e;
    for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
    return e;
}

std::vector<int> iota_cycle(int n) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = i;
    return c;
}

}  // namespace

maximal_outerplanar_graph gen_fan_pendant(int k) {
    if (k < 1) throw error(errc::invalid_input, "k must be positive");
    int n = 2 * k + 4;
    std::vector<edge> edges;
    for (int i = 1; i <= k + 2; ++i) edges.push_back({0, i});
    for (int i = 1; i <= k + 1; ++i) {
        edges.push_back({i, i + 1});
        int p = k + 2 + i;
        edges.push_back({i, p});
        edges.push_back({i + 1, p});
    }
    maximal_outerplanar_graph m;
    m.graph = recognize_outerplanar(n, edges);
    return m;
}

embedded_graph gen_nested_family(int n, int max_n) {
    if (n < 0) throw error(errc::invalid_input, "n must be non-negative");
    if (n > max_n) throw error(errc::size_limit, "nested family level above cap");
    embedded_graph out;
    out.levels = n;
    std::vector<edge> edges{{0, 1}, {1, 2}, {0, 2}};
    struct dist_edge {
        edge e;
        std::array<int, 3> face;
    };
    std::vector<dist_edge> cur{{{0, 1}, {0, 1, 2}}, {{1, 2}, {0, 1, 2}}};
    int next = 3;
    for (int lvl = 1; lvl <= n; ++lvl) {
        std::vector<dist_edge> nxt;
        for (const auto& d : cur) {
            int v = next++;
            out.face_assignment.push_back({v, d.e, d.face, lvl});
            edges.push_back(make_edge(d.e.first, v));
            edges.push_back(make_edge(d.e.second, v));
            std::array<int, 3> f{d.e.first, d.e.second, v};
            nxt.push_back({make_edge(d.e.first, v), f});
            nxt.push_back({make_edge(d.e.second, v), f});
        }
        cur = std::move(nxt);
    }
    for (const auto& d : cur) out.distinguished_edges.push_back(d.e);
    out.graph.graph = recognize_outerplanar(next, edges);
    return out;
}

maximal_outerplanar_graph gen_random_maximal_outerplanar(int n, std::uint64_t seed) {
    if (n < 3) throw error(errc::empty_or_trivial, "need at least 3 vertices");
    std::mt19937_64 rng(seed);
    std::vector<edge> edges = cycle_edges(n);
    // cut random ears
    std::vector<int> nxt(n), prv(n), alive = iota_cycle(n), where(n);
    for (int i = 0; i < n; ++i) {
        nxt[i] = (i + 1) % n;
        prv[i] = (i + n - 1) % n;
        where[i] = i;
    }
    int left = n;
    while (left > 3) {
        int v = alive[bounded(rng, alive.size())];
        int a = prv[v], b = nxt[v];
        edges.push_back(make_edge(a, b));
        nxt[a] = b;
        prv[b] = a;
        int w = where[v];
        alive[w] = alive.back();
        where[alive[w]] = w;
        alive.pop_back();
        --left;
    }
    maximal_outerplanar_graph m;
    m.graph = embed_with_cycle(n, edges, iota_cycle(n));
    return m;
}

outerplanar_graph gen_random_bipartite_outerplanar(int n, std::uint64_t seed) {
    if (n < 4 || n % 2) throw error(errc::invalid_input, "need an even n >= 4");
    std::mt19937_64 rng(seed);
    std::vector<edge> edges = cycle_edges(n);
    std::vector<int> poly = iota_cycle(n);
    // cut random quadrilaterals, keep each chord with probability 1/2
    while (poly.size() > 4) {
        size_t m = poly.size();
        size_t i = bounded(rng, m);
        int a = poly[i], b = poly[(i + 3) % m];
        if (bounded(rng, 2)) edges.push_back(make_edge(a, b));
        // drop the two vertices strictly between a and b
        size_t r1 = (i + 1) % m, r2 = (i + 2) % m;
        if (r1 > r2) std::swap(r1, r2);
        poly.erase(poly.begin() + r2);
        poly.erase(poly.begin() + r1);
    }
    return embed_with_cycle(n, edges, iota_cycle(n));
}

double min_triangle_area(double delta) {
    if (!(delta > 0)) throw error(errc::non_positive_delta, "delta must be positive");
    return 0.5 * std::sqrt(delta + delta * delta);
}

long long required_k(double eps) {
    if (!(eps > 0 && eps < 2)) throw error(errc::epsilon_out_of_range, "epsilon must lie in (0,2)");
    double delta = eps / (2 * (2 - eps));
    double x = 8 * M_PI / std::sqrt(delta + delta * delta);
    return (long long)std::floor(x) + 1;
}

}  // namespace outerdraw
