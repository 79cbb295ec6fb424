#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ricci {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // always stored with first < second

inline Edge make_edge(Vertex u, Vertex v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Immutable simple undirected graph on vertices 0..n-1.
// Construction rejects loops and duplicate edges; adjacency lists are
// sorted, so all derived computations are deterministic.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;
    bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

    // Shortest-path distance; nullopt when unreachable (or beyond cap).
    std::optional<int> distance(Vertex u, Vertex v,
                                std::optional<int> cap = std::nullopt) const;

    // BFS distances from src, capped; -1 marks "beyond cap / unreachable".
    std::vector<int> distances_from(Vertex src,
                                    std::optional<int> cap = std::nullopt) const;

    bool connected() const;

    // Relabels vertices: vertex v becomes perm[v].
    Graph permuted(const std::vector<int>& perm) const;

    // Graph with one extra vertex n, adjacent to `attach`.
    Graph with_added_vertex(const std::vector<Vertex>& attach) const;
    Graph without_vertex(Vertex v) const;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;                 // sorted
    std::vector<std::vector<Vertex>> adj_;    // sorted per vertex
};

// A 4-cycle as a vertex quadruple in cyclic order, canonicalized to the
// lexicographically least rotation/reflection.
using FourCycle = std::array<Vertex, 4>;

FourCycle canonical_four_cycle(const FourCycle& c);

struct CycleCatalog {
    std::optional<int> girth;          // nullopt = acyclic
    std::vector<FourCycle> four_cycles;
};

CycleCatalog girth_and_cycles(const Graph& g);

bool four_cycles_vertex_disjoint(const Graph& g);
bool four_cycles_edge_disjoint(const Graph& g);

// All 4-cycles through a specific edge (uv must be an edge of each cycle).
std::vector<FourCycle> four_cycles_through_edge(const Graph& g, Vertex u, Vertex v);

}  // namespace ricci
