#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ricci/canonical.hpp"
#include "ricci/graph.hpp"

namespace ricci {

enum class SearchMode { Brute, Guided };

std::string to_string(SearchMode m);

struct SearchConstraints {
    int max_vertices = 12;  // brute mode refuses > 14 (resource guard)
    int degree_cap = 4;     // justified by the local-structure lemmas
    bool require_vertex_disjoint_4cycles = true;
    // Cheap structural prefilter before curvature; disabling never changes
    // the found set, only the number of curvature evaluations.
    bool lemma_filters = true;
    SearchMode mode = SearchMode::Brute;
    int jobs = 1;
};

struct SearchCounters {
    std::uint64_t generated = 0;             // accepted enumeration nodes
    std::uint64_t canonical_rejections = 0;  // children failing the augmentation test
    std::uint64_t hereditary_rejections = 0; // overlapping 4-cycles during growth
    std::uint64_t candidates = 0;            // nodes reaching the candidate filter
    std::uint64_t structure_rejections = 0;  // girth / min-degree / disjointness
    std::uint64_t lemma_rejections = 0;      // failed the local-structure prefilter
    std::uint64_t curvature_evaluations = 0; // full per-graph curvature runs
    std::uint64_t guided_states = 0;         // states visited by the guided engine
    std::uint64_t guard_hits = 0;            // guided branches cut by the size guard
};

struct FoundGraph {
    CanonicalForm form;
    Graph graph;
};

struct GuidedCaseResult {
    std::string label;  // cyclic degree sequence of the seeded 4-cycle
    std::vector<FoundGraph> found;
    std::uint64_t states = 0;
    std::uint64_t guard_hits = 0;
};

// Frozen search state: unexpanded frontier tasks plus everything found and
// counted so far. Serialized as a line-oriented text file.
struct Checkpoint {
    std::uint64_t constraint_hash = 0;
    std::vector<std::string> pending;  // graph6 of frontier roots
    std::vector<std::string> found;    // graph6 of graphs found so far
    SearchCounters counters;
};

std::uint64_t constraint_hash(const SearchConstraints& c);
std::string serialize_checkpoint(const Checkpoint& cp);
// Throws std::runtime_error on a malformed file.
Checkpoint parse_checkpoint(const std::string& text);

struct SearchResult {
    // Deduplicated by canonical form and sorted by it.
    std::vector<FoundGraph> found;
    SearchCounters counters;
    double elapsed_seconds = 0;
    bool completed = true;  // false when interrupted mid-run
    // Present exactly when the run was interrupted; resuming from it yields
    // the same found set as an uninterrupted run.
    std::optional<Checkpoint> checkpoint;
    std::vector<GuidedCaseResult> cases;  // guided mode only
    std::string note;
};

using InterruptFn = std::function<bool()>;

// Isomorph-free exhaustive enumeration (brute mode) of connected
// triangle-free graphs with bounded degree, filtered down to Ricci-flat
// girth-4 graphs with vertex-disjoint 4-cycles. Guided mode dispatches to
// guided_search. `interrupt` is polled between work units; `resume`
// continues a checkpointed run (constraint hash must match).
SearchResult enumerate_flat_graphs(const SearchConstraints& c,
                                   const InterruptFn& interrupt = {},
                                   const Checkpoint* resume = nullptr);

// Cross-check oracle: plain breadth-first generation deduplicated by a
// global canonical-form set, no augmentation-based pruning. Same filters,
// same found set; only viable at small sizes (refuses max_vertices > 11).
SearchResult naive_enumerate(const SearchConstraints& c);

// Structure-guided engine: seeds one 4-cycle per admissible cyclic degree
// sequence, grows it under the local-structure lemmas, and re-verifies
// every completed graph by full curvature. `max_vertices` is the branch
// size guard; branches cut by it are counted, not silently dropped.
SearchResult guided_search(int max_vertices = 16);

}  // namespace ricci
