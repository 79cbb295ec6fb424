#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "ricci/transport.hpp"
#include "test_helpers.hpp"

using namespace ricci;

namespace {

CostFn abs_cost = [](Vertex u, Vertex v) { return u > v ? u - v : v - u; };

MassVector mv(std::vector<std::pair<Vertex, Rational>> e) {
    return MassVector(std::move(e));
}

}  // namespace

TEST_CASE("mass vector normalizes entries") {
    MassVector m({{3, rat(1, 2)}, {1, rat(1, 4)}, {2, rat(0)}, {5, rat(1, 4)}});
    CHECK(m.entries().size() == 3);  // zero mass dropped
    CHECK(m.entries().front().first == 1);
    CHECK(m.mass(3) == rat(1, 2));
    CHECK(m.mass(2) == 0);
    CHECK(m.is_probability());
    CHECK(m.support() == std::vector<Vertex>{1, 3, 5});
}

TEST_CASE("transport rejects bad inputs") {
    auto half = mv({{0, rat(1, 2)}});
    auto one = mv({{0, rat(1)}});
    CHECK_THROWS_AS(solve_transport(half, one, abs_cost), std::invalid_argument);
    CHECK_THROWS_AS(solve_transport(one, half, abs_cost), std::invalid_argument);
    CostFn negative = [](Vertex, Vertex) { return -1; };
    CHECK_THROWS_AS(solve_transport(one, mv({{1, rat(1)}}), negative),
                    std::invalid_argument);
}

TEST_CASE("identical distributions ship for free") {
    auto m = mv({{0, rat(1, 3)}, {4, rat(2, 3)}});
    auto sol = solve_transport(m, m, abs_cost);
    CHECK(sol.plan.cost == 0);
    CHECK(sol.certificate.objective == 0);
}

TEST_CASE("2x2 instances match the closed form") {
    // Supplies (s, 1-s) at {0, 1}; demands (t, 1-t) at {2, 3}. One free
    // variable z = flow(0 -> 2); cost is affine in z, so the optimum sits
    // at an interval endpoint. Check against minimizing over both ends.
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(1, 7);
    for (int trial = 0; trial < 50; ++trial) {
        Rational s = rat(num(rng), 8), t = rat(num(rng), 8);
        auto supply = mv({{0, s}, {1, 1 - s}});
        auto demand = mv({{2, t}, {3, 1 - t}});
        auto c = [&](Vertex u, Vertex v) { return abs_cost(u, v); };
        auto cost_at = [&](const Rational& z) -> Rational {
            return z * c(0, 2) + (s - z) * c(0, 3) + (t - z) * c(1, 2) +
                   (1 - s - t + z) * c(1, 3);
        };
        Rational lo = std::max(Rational(0), Rational(s + t - 1));
        Rational hi = std::min(s, t);
        Rational best = std::min(cost_at(lo), cost_at(hi));
        auto sol = solve_transport(supply, demand, abs_cost);
        CHECK(sol.plan.cost == best);
    }
}

TEST_CASE("random small instances match the unit-enumeration oracle") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> sz(1, 4), vtx(0, 9), costv(0, 5);
    for (int trial = 0; trial < 120; ++trial) {
        // Random supports of size <= 4 with denominators <= 8.
        auto random_mass = [&](std::vector<std::pair<Vertex, Rational>>& out) {
            int k = sz(rng);
            std::set<Vertex> verts;
            while (static_cast<int>(verts.size()) < k) verts.insert(vtx(rng));
            std::vector<int> parts(k, 1);
            for (int extra = 0; extra < 8 - k; ++extra)
                parts[std::uniform_int_distribution<int>(0, k - 1)(rng)]++;
            int i = 0;
            for (Vertex v : verts) out.push_back({v, rat(parts[i++], 8)});
        };
        std::vector<std::pair<Vertex, Rational>> se, de;
        random_mass(se);
        random_mass(de);
        auto supply = mv(se), demand = mv(de);

        // Random symmetric integer metric on vertices 0..9: random costs
        // followed by a shortest-path closure.
        int dist[10][10];
        for (int u = 0; u < 10; ++u)
            for (int v = u; v < 10; ++v) {
                int c = u == v ? 0 : 1 + costv(rng);
                dist[u][v] = dist[v][u] = c;
            }
        for (int w = 0; w < 10; ++w)
            for (int u = 0; u < 10; ++u)
                for (int v = 0; v < 10; ++v)
                    dist[u][v] = std::min(dist[u][v], dist[u][w] + dist[w][v]);
        CostFn cost = [&](Vertex u, Vertex v) { return dist[u][v]; };

        auto sol = solve_transport(supply, demand, cost);
        CHECK(sol.plan.cost == testutil::transport_oracle(supply, demand, cost));
        std::string why;
        CHECK_MESSAGE(verify_plan(sol.plan, supply, demand, cost, &why), why);
    }
}

TEST_CASE("strong duality and certificate checks on metric costs") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = testutil::random_triangle_free(rng, 8, 0.35);
        if (g.edge_count() == 0) continue;
        std::uniform_int_distribution<size_t> pe(0, g.edges().size() - 1);
        Edge e = g.edges()[pe(rng)];
        Vertex x = e.first, y = e.second;
        // Lazy-walk style masses around both endpoints.
        std::vector<std::pair<Vertex, Rational>> se{{x, rat(1, 2)}}, de{{y, rat(1, 2)}};
        for (Vertex w : g.neighbors(x)) se.push_back({w, rat(1, 2 * g.degree(x))});
        for (Vertex w : g.neighbors(y)) de.push_back({w, rat(1, 2 * g.degree(y))});
        auto supply = mv(se), demand = mv(de);
        CostFn cost = [&](Vertex u, Vertex v) { return *g.distance(u, v); };

        auto sol = solve_transport(supply, demand, cost);
        CHECK(sol.plan.cost == sol.certificate.objective);
        std::string why;
        CHECK_MESSAGE(verify_plan(sol.plan, supply, demand, cost, &why), why);
        CHECK_MESSAGE(verify_certificate(sol.certificate, supply, demand, cost, &why),
                      why);
        // Any independently generated 1-Lipschitz potential stays below.
        std::vector<Vertex> verts;
        for (auto& [v, m] : supply.entries()) verts.push_back(v);
        for (auto& [v, m] : demand.entries())
            if (!std::count(verts.begin(), verts.end(), v)) verts.push_back(v);
        auto f = testutil::random_lipschitz(rng, g, verts);
        Rational lower = 0;
        for (Vertex v : verts) lower += f[v] * (supply.mass(v) - demand.mass(v));
        CHECK(lower <= sol.plan.cost);
    }
}

TEST_CASE("scaling to a common denominator and swapping sides preserve cost") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> vtx(0, 7), costv(1, 4), den(2, 7);
    for (int trial = 0; trial < 60; ++trial) {
        // Masses with mixed denominators, so the solver must scale over a
        // nontrivial common denominator internally.
        auto random_mass = [&]() {
            int d = den(rng);
            std::set<Vertex> verts;
            int k = std::uniform_int_distribution<int>(1, std::min(4, d))(rng);
            while (static_cast<int>(verts.size()) < k) verts.insert(vtx(rng));
            std::vector<int> parts(k, 1);
            for (int extra = 0; extra < d - k; ++extra)
                parts[std::uniform_int_distribution<int>(0, k - 1)(rng)]++;
            std::vector<std::pair<Vertex, Rational>> out;
            int i = 0;
            for (Vertex v : verts) out.push_back({v, rat(parts[i++], d)});
            return mv(out);
        };
        auto supply = random_mass(), demand = random_mass();

        int dist[8][8];
        for (int u = 0; u < 8; ++u)
            for (int v = u; v < 8; ++v) {
                int c = u == v ? 0 : costv(rng);
                dist[u][v] = dist[v][u] = c;
            }
        for (int w = 0; w < 8; ++w)
            for (int u = 0; u < 8; ++u)
                for (int v = 0; v < 8; ++v)
                    dist[u][v] = std::min(dist[u][v], dist[u][w] + dist[w][v]);
        CostFn cost = [&](Vertex u, Vertex v) { return dist[u][v]; };

        auto sol = solve_transport(supply, demand, cost);
        CHECK(sol.plan.cost == testutil::transport_oracle(supply, demand, cost));

        // Re-expressing every entry over one shared denominator describes the
        // same distributions, so the optimum must not move.
        long common = 1;
        for (auto& [v, m] : supply.entries()) common = std::lcm(common, m.get_den().get_si());
        for (auto& [v, m] : demand.entries()) common = std::lcm(common, m.get_den().get_si());
        auto rescale = [&](const MassVector& m) {
            std::vector<std::pair<Vertex, Rational>> out;
            for (auto& [v, q] : m.entries()) {
                Rational units = q * common;
                Rational scaled = rat(units.get_num().get_si(), common);
                out.push_back({v, scaled});
            }
            return mv(out);
        };
        auto scaled = solve_transport(rescale(supply), rescale(demand), cost);
        CHECK(scaled.plan.cost == sol.plan.cost);

        // Symmetry: transposed problem ships the same mass the other way.
        CostFn transposed = [&](Vertex u, Vertex v) { return dist[v][u]; };
        auto swapped = solve_transport(demand, supply, transposed);
        CHECK(swapped.plan.cost == sol.plan.cost);
    }
}

TEST_CASE("verifiers reject corrupted artifacts") {
    auto supply = mv({{0, rat(1)}});
    auto demand = mv({{2, rat(1)}});
    auto sol = solve_transport(supply, demand, abs_cost);
    CHECK(sol.plan.cost == 2);

    TransportPlan bad = sol.plan;
    bad.cost += 1;
    std::string why;
    CHECK(!verify_plan(bad, supply, demand, abs_cost, &why));
    CHECK(!why.empty());

    TransportPlan wrong_mass = sol.plan;
    wrong_mass.moves[0].amount = rat(1, 2);
    CHECK(!verify_plan(wrong_mass, supply, demand, abs_cost));

    DualCertificate lying = sol.certificate;
    lying.potential[0] += 5;  // breaks the Lipschitz constraint
    CHECK(!verify_certificate(lying, supply, demand, abs_cost));
}
