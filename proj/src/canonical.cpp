#include "ricci/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ricci/graph_io.hpp"

namespace ricci {

namespace {

// One round: key = (own color, sorted neighbor colors); new colors are
// ranks of sorted distinct keys, which keeps them isomorphism-invariant.
std::vector<int> refine_once(const Graph& g, const std::vector<int>& colors, bool* changed) {
    int n = g.vertex_count();
    std::vector<std::pair<std::vector<int>, int>> keys(n);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<int> key{colors[v]};
        for (Vertex w : g.neighbors(v)) key.push_back(colors[w]);
        std::sort(key.begin() + 1, key.end());
        keys[v] = {std::move(key), v};
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& [key, v] : keys) rank.emplace(key, 0);
    int r = 0;
    for (auto& [key, idx] : rank) idx = r++;
    std::vector<int> out(n);
    for (Vertex v = 0; v < n; ++v) out[v] = rank.at(keys[v].first);
    *changed = out != colors;
    return out;
}

std::vector<int> refine(const Graph& g, std::vector<int> colors) {
    bool changed = true;
    while (changed) colors = refine_once(g, colors, &changed);
    return colors;
}

struct CanonSearch {
    const Graph& g;
    std::string best;                 // adjacency bitstring of best leaf
    std::vector<int> best_labeling;
    std::vector<std::vector<int>> autos;

    std::string leaf_string(const std::vector<int>& label) const {
        int n = g.vertex_count();
        std::vector<Vertex> inv(n);
        for (Vertex v = 0; v < n; ++v) inv[label[v]] = v;
        std::string s;
        s.reserve(static_cast<size_t>(n) * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s.push_back(g.adjacent(inv[i], inv[j]) ? '1' : '0');
        return s;
    }

    void visit_leaf(const std::vector<int>& colors) {
        std::string s = leaf_string(colors);
        if (best.empty() || s < best) {
            best = s;
            best_labeling = colors;
            autos.clear();
        } else if (s == best) {
            // colors and best_labeling induce the same canonical graph, so
            // sigma(v) = inv_colors[best_labeling[v]] is an automorphism.
            int n = g.vertex_count();
            std::vector<int> inv(n), sigma(n);
            for (Vertex v = 0; v < n; ++v) inv[colors[v]] = v;
            for (Vertex v = 0; v < n; ++v) sigma[v] = inv[best_labeling[v]];
            autos.push_back(std::move(sigma));
        }
    }

    void run(const std::vector<int>& colors) {
        int n = g.vertex_count();
        // First non-singleton cell, by color value.
        int target_color = -1;
        std::vector<int> count(n, 0);
        for (int c : colors) count[c]++;
        for (int c = 0; c < n; ++c) {
            if (count[c] > 1) {
                target_color = c;
                break;
            }
        }
        if (target_color < 0) {
            visit_leaf(colors);
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (colors[v] != target_color) continue;
            std::vector<int> next(n);
            for (Vertex u = 0; u < n; ++u) {
                next[u] = 2 * colors[u] + (colors[u] == target_color && u != v ? 1 : 0);
            }
            run(refine(g, next));
        }
    }
};

}  // namespace

std::vector<int> refinement_colors(const Graph& g) {
    return refine(g, std::vector<int>(g.vertex_count(), 0));
}

CanonicalResult canonical_label(const Graph& g, int limit) {
    int n = g.vertex_count();
    if (n > limit)
        throw std::invalid_argument("canonical form limited to " + std::to_string(limit) +
                                    " vertices, got " + std::to_string(n));
    CanonicalResult res;
    if (n == 0) {
        res.form.bytes = to_graph6(g);
        return res;
    }
    CanonSearch search{g};
    search.run(refine(g, std::vector<int>(n, 0)));
    res.labeling = search.best_labeling;
    res.automorphisms = std::move(search.autos);
    res.form.bytes = to_graph6(g.permuted(res.labeling));
    return res;
}

CanonicalForm canonical_form(const Graph& g, int limit) {
    return canonical_label(g, limit).form;
}

std::vector<int> vertex_orbits(int n, const std::vector<std::vector<int>>& generators) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& sigma : generators) {
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(sigma[v]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<int> orbit(n);
    for (int v = 0; v < n; ++v) orbit[v] = find(v);
    return orbit;
}

std::vector<bool> non_cut_vertices(const Graph& g) {
    int n = g.vertex_count();
    std::vector<bool> ok(n, false);
    for (Vertex v = 0; v < n; ++v) {
        if (n == 1) {
            ok[v] = true;
            continue;
        }
        ok[v] = g.without_vertex(v).connected();
    }
    return ok;
}

}  // namespace ricci
