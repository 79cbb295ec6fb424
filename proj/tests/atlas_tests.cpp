#include "doctest.h"

#include "ricci/atlas.hpp"
#include "ricci/canonical.hpp"
#include "ricci/curvature.hpp"

using namespace ricci;

TEST_CASE("named graphs have the documented shapes") {
    CHECK(named_graph("cycle", 7).graph.edge_count() == 7);
    CHECK(named_graph("path", 5).graph.edge_count() == 4);
    CHECK(named_graph("complete", 5).graph.edge_count() == 10);

    auto petersen = named_graph("petersen").graph;
    CHECK(petersen.vertex_count() == 10);
    CHECK(petersen.edge_count() == 15);
    CHECK(*girth_and_cycles(petersen).girth == 5);

    auto dodec = named_graph("dodecahedral").graph;
    CHECK(dodec.vertex_count() == 20);
    CHECK(dodec.edge_count() == 30);
    CHECK(*girth_and_cycles(dodec).girth == 5);

    auto half = named_graph("half_dodecahedral").graph;
    CHECK(half.vertex_count() == 15);
    CHECK(half.edge_count() == 20);
    CHECK(*girth_and_cycles(half).girth == 5);

    auto r1 = named_graph("r1").graph;
    CHECK(r1.vertex_count() == 14);
    CHECK(r1.edge_count() == 20);
    CHECK(*girth_and_cycles(r1).girth == 4);
    CHECK(girth_and_cycles(r1).four_cycles.size() == 1);

    auto r2 = named_graph("r2").graph;
    CHECK(r2.vertex_count() == 12);
    CHECK(r2.edge_count() == 18);
    CHECK(*girth_and_cycles(r2).girth == 4);
    CHECK(girth_and_cycles(r2).four_cycles.size() == 2);
    CHECK(four_cycles_vertex_disjoint(r2));
}

TEST_CASE("diamond necklace 4-cycles are edge- but not vertex-disjoint") {
    for (int k = 3; k <= 6; ++k) {
        auto g = named_graph("diamond_necklace", k).graph;
        CHECK(g.vertex_count() == 3 * k);
        CHECK(g.edge_count() == 4 * k);
        CHECK(girth_and_cycles(g).four_cycles.size() == static_cast<size_t>(k));
        CHECK(four_cycles_edge_disjoint(g));
        CHECK(!four_cycles_vertex_disjoint(g));
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(named_graph("cycle"), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("cycle", 2), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("petersen", 5), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("diamond_necklace", 2), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("no_such_graph"), std::invalid_argument);
}

TEST_CASE("every advertised name resolves") {
    for (const auto& name : atlas_names()) {
        bool needs_parameter = name == "cycle" || name == "path" ||
                               name == "complete" || name == "diamond_necklace";
        auto entry = needs_parameter ? named_graph(name, 6) : named_graph(name);
        CHECK(entry.graph.vertex_count() > 0);
        CHECK(!entry.note.empty());
    }
}

TEST_CASE("r1 and r2 are not isomorphic to each other and are rigid sizes") {
    CHECK(canonical_form(named_graph("r1").graph) !=
          canonical_form(named_graph("r2").graph));
}

TEST_CASE("full atlas verification passes") {
    auto report = verify_atlas(4);
    CHECK(report.all_pass);
    CHECK(report.rows.size() >= 20);
    for (const auto& row : report.rows) {
        INFO(row.entry.name, " ", row.detail);
        CHECK(row.pass);
    }
    // Expectations marked flat really were computed flat.
    for (const auto& row : report.rows)
        if (row.entry.expected_flat == Flatness::Flat)
            CHECK(row.computed == Flatness::Flat);
}

TEST_CASE("flatness labels to_string") {
    CHECK(to_string(Flatness::Flat) == "flat");
    CHECK(to_string(Flatness::NotFlat) == "not-flat");
    CHECK(to_string(Flatness::Unknown) == "unknown");
}
