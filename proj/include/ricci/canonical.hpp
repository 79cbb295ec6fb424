#pragma once

#include <string>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci {

// Canonical byte form: graph6 of the canonically relabeled graph. Two
// graphs have equal forms iff they are isomorphic.
struct CanonicalForm {
    std::string bytes;
    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalResult {
    CanonicalForm form;
    std::vector<int> labeling;  // labeling[v] = canonical label of v
    // Automorphism generators as full permutations (image per vertex).
    // The backtracking is exhaustive, so these generate the whole group.
    std::vector<std::vector<int>> automorphisms;
};

inline constexpr int kDefaultCanonicalLimit = 20;

CanonicalResult canonical_label(const Graph& g, int limit = kDefaultCanonicalLimit);
CanonicalForm canonical_form(const Graph& g, int limit = kDefaultCanonicalLimit);

// Stable 1-WL color per vertex; equal values are isomorphism-invariant
// (colors are ranks of sorted signature keys).
std::vector<int> refinement_colors(const Graph& g);

// Orbit id per vertex under the group generated by `generators`
// (smallest vertex in the orbit).
std::vector<int> vertex_orbits(int n, const std::vector<std::vector<int>>& generators);

// Vertices whose removal keeps the graph connected.
std::vector<bool> non_cut_vertices(const Graph& g);

}  // namespace ricci
