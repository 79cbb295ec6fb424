#include "ricci/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace ricci {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::set<Edge> seen;
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (!has_vertex(u) || !has_vertex(v))
            throw std::invalid_argument("edge endpoint out of range");
        Edge e = make_edge(u, v);
        if (!seen.insert(e).second)
            throw std::invalid_argument("duplicate edge " + std::to_string(e.first) + "-" +
                                        std::to_string(e.second));
        adj_[e.first].push_back(e.second);
        adj_[e.second].push_back(e.first);
    }
    edges_.assign(seen.begin(), seen.end());
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::check_vertex(Vertex v) const {
    if (!has_vertex(v)) throw std::out_of_range("vertex index " + std::to_string(v));
}

std::vector<int> Graph::distances_from(Vertex src, std::optional<int> cap) const {
    check_vertex(src);
    std::vector<int> dist(n_, -1);
    dist[src] = 0;
    std::deque<Vertex> queue{src};
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (cap && dist[u] >= *cap) continue;
        for (Vertex w : adj_[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::optional<int> Graph::distance(Vertex u, Vertex v, std::optional<int> cap) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0;
    auto dist = distances_from(u, cap);
    if (dist[v] < 0) return std::nullopt;
    return dist[v];
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    auto dist = distances_from(0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> mapped;
    mapped.reserve(edges_.size());
    for (auto [u, v] : edges_) mapped.push_back(make_edge(perm[u], perm[v]));
    return Graph(n_, mapped);
}

Graph Graph::with_added_vertex(const std::vector<Vertex>& attach) const {
    std::vector<Edge> e = edges_;
    for (Vertex u : attach) e.push_back(make_edge(u, n_));
    return Graph(n_ + 1, e);
}

Graph Graph::without_vertex(Vertex v) const {
    check_vertex(v);
    std::vector<Edge> e;
    for (auto [a, b] : edges_) {
        if (a == v || b == v) continue;
        e.push_back(make_edge(a > v ? a - 1 : a, b > v ? b - 1 : b));
    }
    return Graph(n_ - 1, e);
}

FourCycle canonical_four_cycle(const FourCycle& c) {
    FourCycle best = c;
    FourCycle cur = c;
    for (int flip = 0; flip < 2; ++flip) {
        for (int rot = 0; rot < 4; ++rot) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (cur < best) best = cur;
        }
        std::reverse(cur.begin(), cur.end());
    }
    return best;
}

namespace {

// Collects all 4-cycles by scanning diagonal pairs (a, c) and their
// common neighbors; each cycle is found from both diagonals, so the
// canonical set dedups.
std::set<FourCycle> all_four_cycles(const Graph& g) {
    std::set<FourCycle> cycles;
    int n = g.vertex_count();
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex c = a + 1; c < n; ++c) {
            std::vector<Vertex> common;
            const auto& na = g.neighbors(a);
            const auto& nc = g.neighbors(c);
            std::set_intersection(na.begin(), na.end(), nc.begin(), nc.end(),
                                  std::back_inserter(common));
            for (size_t i = 0; i < common.size(); ++i)
                for (size_t j = i + 1; j < common.size(); ++j)
                    cycles.insert(canonical_four_cycle({a, common[i], c, common[j]}));
        }
    }
    return cycles;
}

}  // namespace

CycleCatalog girth_and_cycles(const Graph& g) {
    CycleCatalog cat;
    int n = g.vertex_count();
    int best = -1;
    // BFS from every vertex; the shortest cycle through the BFS root is
    // dist[a] + dist[b] + 1 for a non-tree edge (a, b). The minimum over
    // all roots is the exact girth.
    for (Vertex root = 0; root < n; ++root) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::deque<Vertex> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best >= 0) cat.girth = best;
    if (cat.girth && *cat.girth <= 4) {
        auto cycles = all_four_cycles(g);
        cat.four_cycles.assign(cycles.begin(), cycles.end());
    }
    return cat;
}

std::vector<FourCycle> four_cycles_through_edge(const Graph& g, Vertex u, Vertex v) {
    std::vector<FourCycle> out;
    if (!g.adjacent(u, v)) throw std::invalid_argument("not an edge");
    for (Vertex a : g.neighbors(u)) {
        if (a == v) continue;
        for (Vertex b : g.neighbors(v)) {
            if (b == u || b == a) continue;
            if (g.adjacent(a, b)) out.push_back(canonical_four_cycle({u, v, b, a}));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

bool cycles_share(const std::vector<FourCycle>& cycles, bool by_edge) {
    for (size_t i = 0; i < cycles.size(); ++i) {
        for (size_t j = i + 1; j < cycles.size(); ++j) {
            if (by_edge) {
                std::set<Edge> ei;
                for (int k = 0; k < 4; ++k)
                    ei.insert(make_edge(cycles[i][k], cycles[i][(k + 1) % 4]));
                for (int k = 0; k < 4; ++k)
                    if (ei.count(make_edge(cycles[j][k], cycles[j][(k + 1) % 4]))) return true;
            } else {
                for (Vertex a : cycles[i])
                    for (Vertex b : cycles[j])
                        if (a == b) return true;
            }
        }
    }
    return false;
}

}  // namespace

bool four_cycles_vertex_disjoint(const Graph& g) {
    return !cycles_share(girth_and_cycles(g).four_cycles, false);
}

bool four_cycles_edge_disjoint(const Graph& g) {
    return !cycles_share(girth_and_cycles(g).four_cycles, true);
}

}  // namespace ricci
