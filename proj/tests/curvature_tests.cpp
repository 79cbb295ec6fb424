#include "doctest.h"

#include <random>

#include "ricci/curvature.hpp"
#include "test_helpers.hpp"

using namespace ricci;

namespace {

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, e);
}

Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back(make_edge(i, j));
    return Graph(n, e);
}

}  // namespace

TEST_CASE("mass distribution is the lazy random walk") {
    Graph g = cycle(4);
    auto m = mass_distribution(g, 0, rat(3, 4));
    CHECK(m.masses.mass(0) == rat(3, 4));
    CHECK(m.masses.mass(1) == rat(1, 8));
    CHECK(m.masses.mass(3) == rat(1, 8));
    CHECK(m.masses.is_probability());
    CHECK_THROWS_AS(mass_distribution(g, 0, rat(3, 2)), std::invalid_argument);
}

TEST_CASE("known exact curvature values") {
    // Single edge: kappa = 2.
    CHECK(ricci_curvature(Graph(2, {{0, 1}}), 0, 1).kappa == 2);
    // Square: kappa = 1 on every edge.
    Graph c4 = cycle(4);
    for (const Edge& e : c4.edges())
        CHECK(ricci_curvature(c4, e.first, e.second).kappa == 1);
    // Pentagon: kappa = 1/2; hexagon and beyond: 0.
    CHECK(ricci_curvature(cycle(5), 0, 1).kappa == rat(1, 2));
    CHECK(ricci_curvature(cycle(6), 0, 1).kappa == 0);
    CHECK(ricci_curvature(cycle(9), 3, 4).kappa == 0);
    // Complete graphs: kappa = n / (n - 1).
    for (int n = 3; n <= 6; ++n)
        CHECK(ricci_curvature(complete(n), 0, 1).kappa == rat(n, n - 1));
    // Path interior edge is flat, endpoint edge is not.
    Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(ricci_curvature(p5, 1, 2).kappa == 0);
    CHECK(ricci_curvature(p5, 2, 3).kappa == 0);
    // Pendant edge: the whole neighbor mass rides along, kappa = 1.
    CHECK(ricci_curvature(p5, 0, 1).kappa == 1);
}

TEST_CASE("wasserstein at alpha = 1 is free and at the probe is certified") {
    Graph g = cycle(6);
    auto w1 = wasserstein_edge(g, 0, 1, rat(1));
    CHECK(w1.value == 1);  // all mass at the centers, one unit one step
    auto w = wasserstein_edge(g, 0, 1, rat(2, 3));
    CHECK(w.value == w.certificate.objective);
    std::string why;
    CostFn cost = [&](Vertex u, Vertex v) { return *g.distance(u, v); };
    auto mx = mass_distribution(g, 0, rat(2, 3)).masses;
    auto my = mass_distribution(g, 1, rat(2, 3)).masses;
    CHECK_MESSAGE(verify_plan(w.plan, mx, my, cost, &why), why);
    CHECK_MESSAGE(verify_certificate(w.certificate, mx, my, cost, &why), why);
}

TEST_CASE("curvature profile shows the linear tail") {
    Graph g = cycle(5);
    std::vector<Rational> alphas{rat(2, 3), rat(3, 4), rat(5, 6), rat(11, 12), rat(1)};
    auto rows = curvature_profile(g, 0, 1, alphas);
    REQUIRE(rows.size() == alphas.size());
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
        CHECK(rows[i].quotient_defined);
        CHECK(rows[i].quotient == rat(1, 2));  // constant past the threshold
    }
    CHECK(!rows.back().quotient_defined);  // alpha = 1 has no quotient
    CHECK(rows.back().wasserstein == 1);
}

TEST_CASE("edge report carries consistent probes, plan and certificate") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        Graph h = testutil::random_triangle_free(rng, 10, 0.3);
        for (const Edge& e : h.edges()) {
            auto r = ricci_curvature(h, e.first, e.second);
            CHECK(r.probes.size() >= 2);
            CHECK(r.flat == (r.kappa == 0));
            // Probes must themselves satisfy kappa = (1 - W) / (1 - alpha).
            for (const auto& p : r.probes)
                CHECK((1 - p.wasserstein) == r.kappa * (1 - p.alpha));
            CHECK(r.plan.cost == r.certificate.objective);
        }
    }
}

TEST_CASE("whole-graph flatness report aggregates correctly") {
    Graph g = cycle(6);
    auto rep = is_ricci_flat(g, 2);
    CHECK(rep.is_ricci_flat);
    CHECK(rep.flat_edge_count == 6);
    CHECK(rep.min_kappa == 0);
    CHECK(rep.max_kappa == 0);

    auto bad = is_ricci_flat(cycle(5), 2);
    CHECK(!bad.is_ricci_flat);
    CHECK(bad.flat_edge_count == 0);
    CHECK(bad.min_kappa == rat(1, 2));
}

TEST_CASE("parallel and serial flatness reports agree exactly") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = testutil::random_triangle_free(rng, 11, 0.3);
        bool isolated = false;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 0) isolated = true;
        if (isolated || g.edge_count() == 0) continue;
        auto a = is_ricci_flat(g, 1);
        auto b = is_ricci_flat(g, 8);
        REQUIRE(a.edges.size() == b.edges.size());
        for (size_t i = 0; i < a.edges.size(); ++i) {
            CHECK(a.edges[i].edge == b.edges[i].edge);
            CHECK(a.edges[i].kappa == b.edges[i].kappa);
        }
        CHECK(a.min_kappa == b.min_kappa);
        CHECK(a.max_kappa == b.max_kappa);
    }
}

TEST_CASE("probe values match the dense sampling slope on small graphs") {
    // On every connected graph with at most 6 vertices, the reported
    // curvature equals the quotient (1 - W) / (1 - alpha) at every sample
    // alpha = k/24 past the linearity threshold D/(D+1).
    auto levels = testutil::connected_graphs_up_to(6);
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : levels[n])
            for (const Edge& e : g.edges()) {
                auto r = ricci_curvature(g, e.first, e.second);
                int d = std::max(g.degree(e.first), g.degree(e.second));
                std::vector<Rational> alphas;
                for (int k = 12; k <= 23; ++k)
                    if (rat(k, 24) >= rat(d, d + 1)) alphas.push_back(rat(k, 24));
                for (const auto& row : curvature_profile(g, e.first, e.second, alphas)) {
                    REQUIRE(row.quotient_defined);
                    CHECK(row.quotient == r.kappa);
                }
            }
}
