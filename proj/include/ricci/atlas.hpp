#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

enum class Flatness { Flat, NotFlat, Unknown };

std::string to_string(Flatness f);

struct AtlasEntry {
    std::string name;
    std::optional<int> parameter;
    Graph graph;
    Flatness expected_flat = Flatness::Unknown;
    std::string note;  // labeling convention and where the edge list comes from
};

// Deterministic generators for the named graphs and families:
//   cycle(n>=3), path(n>=2), complete(n>=2), petersen, dodecahedral,
//   half_dodecahedral, r1, r2, diamond_necklace(k>=3).
// Throws std::invalid_argument for an unknown name, a missing/extra
// parameter, or a parameter below the family minimum.
AtlasEntry named_graph(const std::string& name, std::optional<int> parameter = {});

// Names accepted by named_graph, in verification order.
std::vector<std::string> atlas_names();

struct AtlasRowResult {
    AtlasEntry entry;
    Flatness computed = Flatness::Unknown;
    bool pass = false;
    std::string detail;
};

struct AtlasReport {
    std::vector<AtlasRowResult> rows;
    bool all_pass = true;
};

// Runs the curvature checker over every entry with a definite expectation
// and compares. Parameterized families are sampled at fixed sizes:
// cycle(4,5,6..12), path(12) (interior edges only, the finite stand-in
// for the two-way infinite path), complete(3,4), diamond_necklace(3..8).
// jobs > 1 splits the per-edge curvature work inside each entry.
AtlasReport verify_atlas(int jobs = 1);

}  // namespace ricci
