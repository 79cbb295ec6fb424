#include "ricci/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ricci/curvature.hpp"
#include "ricci/graph_io.hpp"
#include "ricci/local_structure.hpp"

namespace ricci {

std::string to_string(SearchMode m) {
    return m == SearchMode::Brute ? "brute" : "guided";
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void merge_counters(SearchCounters& a, const SearchCounters& b) {
    a.generated += b.generated;
    a.canonical_rejections += b.canonical_rejections;
    a.hereditary_rejections += b.hereditary_rejections;
    a.candidates += b.candidates;
    a.structure_rejections += b.structure_rejections;
    a.lemma_rejections += b.lemma_rejections;
    a.curvature_evaluations += b.curvature_evaluations;
    a.guided_states += b.guided_states;
    a.guard_hits += b.guard_hits;
}

// Deduplicate by canonical form and sort; among duplicate labelings keep
// the one with the smallest serialization, so output never depends on
// discovery order.
std::vector<FoundGraph> finalize_found(const std::vector<FoundGraph>& raw) {
    std::map<CanonicalForm, Graph> best;
    for (const auto& f : raw) {
        auto it = best.find(f.form);
        if (it == best.end())
            best.emplace(f.form, f.graph);
        else if (to_graph6(f.graph) < to_graph6(it->second))
            it->second = f.graph;
    }
    std::vector<FoundGraph> out;
    for (auto& [form, g] : best) out.push_back({form, g});
    return out;
}

// ---------------------------------------------------------------------
// Candidate filter shared by the brute enumerator and the naive oracle.
// ---------------------------------------------------------------------

bool lemma_prefilter_passes(const Graph& g) {
    if (!four_cycles_vertex_disjoint(g)) return true;  // classifier inapplicable
    for (const Edge& e : g.edges()) {
        auto prof = edge_cycle_profile(g, e);
        if (prof.triangles > 0) return false;
        if (prof.four_cycles == 1) {
            if (classify_four_cycle_edge(g, e).kind == FourCycleKind::NotFlatCompatible)
                return false;
        } else if (prof.four_cycles == 0) {
            if (check_lemma2(g, e).kind == NoFourCycleKind::Violation) return false;
        }
    }
    return true;
}

void consider_candidate(const Graph& g, const SearchConstraints& c,
                        SearchCounters& k, std::vector<FoundGraph>& out) {
    k.candidates++;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 2) {
            k.structure_rejections++;
            return;
        }
    auto cat = girth_and_cycles(g);
    if (!cat.girth || *cat.girth != 4) {
        k.structure_rejections++;
        return;
    }
    if (c.require_vertex_disjoint_4cycles && !four_cycles_vertex_disjoint(g)) {
        k.structure_rejections++;
        return;
    }
    if (c.lemma_filters && !lemma_prefilter_passes(g)) {
        k.lemma_rejections++;
        return;
    }
    k.curvature_evaluations++;
    if (is_ricci_flat(g, 1).is_ricci_flat) out.push_back({canonical_form(g), g});
}

// ---------------------------------------------------------------------
// Brute mode: canonical augmentation.
// ---------------------------------------------------------------------

// Nonempty independent sets of vertices with spare degree: attaching a new
// vertex to such a set keeps the graph triangle-free and inside the cap.
std::vector<std::vector<Vertex>> attachment_sets(const Graph& g, int cap) {
    std::vector<Vertex> cand;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < cap) cand.push_back(v);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur;
    auto rec = [&](auto&& self, size_t start) -> void {
        for (size_t i = start; i < cand.size(); ++i) {
            Vertex v = cand[i];
            bool ok = true;
            for (Vertex u : cur)
                if (g.adjacent(u, v)) ok = false;
            if (!ok) continue;
            cur.push_back(v);
            out.push_back(cur);
            if (static_cast<int>(cur.size()) < cap) self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Keeps one attachment set per orbit of the parent's automorphism group:
// the lexicographically least image.
bool is_orbit_least(const std::vector<Vertex>& set,
                    const std::vector<std::vector<int>>& automorphisms) {
    std::vector<Vertex> image;
    for (const auto& sigma : automorphisms) {
        image.clear();
        for (Vertex v : set) image.push_back(sigma[v]);
        std::sort(image.begin(), image.end());
        if (image < set) return false;
    }
    return true;
}

// Accepts the child exactly when its new vertex lies in the automorphism
// orbit of the canonically last removable vertex, so every isomorphism
// class has a unique generation path (orderly generation).
bool augmentation_is_canonical(const Graph& child) {
    int n = child.vertex_count();
    auto cr = canonical_label(child);
    auto orbit = vertex_orbits(n, cr.automorphisms);
    auto removable = non_cut_vertices(child);
    int best = -1;
    for (Vertex v = 0; v < n; ++v)
        if (removable[v] && (best < 0 || cr.labeling[v] > cr.labeling[best])) best = v;
    return orbit[n - 1] == orbit[best];
}

struct BruteContext {
    SearchConstraints c;
    SearchCounters counters;
    std::vector<FoundGraph> found;
};

// Expands the subtree under g. When `frontier` is given, subtrees rooted
// at `split`-vertex graphs are handed off instead of being descended into.
void brute_expand(const Graph& g, BruteContext& ctx, int split,
                  std::vector<Graph>* frontier) {
    if (g.vertex_count() >= ctx.c.max_vertices) return;
    if (frontier && g.vertex_count() == split) {
        frontier->push_back(g);
        return;
    }
    auto parent = canonical_label(g);
    for (const auto& set : attachment_sets(g, ctx.c.degree_cap)) {
        if (!is_orbit_least(set, parent.automorphisms)) continue;
        Graph child = g.with_added_vertex(set);
        if (ctx.c.require_vertex_disjoint_4cycles && !four_cycles_vertex_disjoint(child)) {
            ctx.counters.hereditary_rejections++;
            continue;
        }
        if (!augmentation_is_canonical(child)) {
            ctx.counters.canonical_rejections++;
            continue;
        }
        ctx.counters.generated++;
        consider_candidate(child, ctx.c, ctx.counters, ctx.found);
        brute_expand(child, ctx, split, frontier);
    }
}

std::string constraint_key(const SearchConstraints& c) {
    std::ostringstream os;
    os << "mode=" << to_string(c.mode) << ";max_vertices=" << c.max_vertices
       << ";degree_cap=" << c.degree_cap
       << ";disjoint=" << (c.require_vertex_disjoint_4cycles ? 1 : 0)
       << ";lemma_filters=" << (c.lemma_filters ? 1 : 0);
    return os.str();
}

}  // namespace

std::uint64_t constraint_hash(const SearchConstraints& c) {
    return fnv1a(constraint_key(c));
}

std::string serialize_checkpoint(const Checkpoint& cp) {
    std::ostringstream os;
    os << "ricci-search-checkpoint 1\n";
    os << "hash " << cp.constraint_hash << "\n";
    const auto& k = cp.counters;
    os << "generated " << k.generated << "\n";
    os << "canonical_rejections " << k.canonical_rejections << "\n";
    os << "hereditary_rejections " << k.hereditary_rejections << "\n";
    os << "candidates " << k.candidates << "\n";
    os << "structure_rejections " << k.structure_rejections << "\n";
    os << "lemma_rejections " << k.lemma_rejections << "\n";
    os << "curvature_evaluations " << k.curvature_evaluations << "\n";
    os << "guided_states " << k.guided_states << "\n";
    os << "guard_hits " << k.guard_hits << "\n";
    os << "pending " << cp.pending.size() << "\n";
    for (const auto& s : cp.pending) os << s << "\n";
    os << "found " << cp.found.size() << "\n";
    for (const auto& s : cp.found) os << s << "\n";
    os << "end\n";
    return os.str();
}

Checkpoint parse_checkpoint(const std::string& text) {
    std::istringstream is(text);
    auto fail = [](const std::string& why) -> void {
        throw std::runtime_error("corrupt checkpoint: " + why);
    };
    std::string word;
    int version = 0;
    if (!(is >> word >> version) || word != "ricci-search-checkpoint") fail("bad header");
    if (version != 1) fail("unsupported version " + std::to_string(version));
    Checkpoint cp;
    auto read_field = [&](const std::string& name, std::uint64_t& dst) {
        if (!(is >> word >> dst) || word != name) fail("expected field " + name);
    };
    read_field("hash", cp.constraint_hash);
    auto& k = cp.counters;
    read_field("generated", k.generated);
    read_field("canonical_rejections", k.canonical_rejections);
    read_field("hereditary_rejections", k.hereditary_rejections);
    read_field("candidates", k.candidates);
    read_field("structure_rejections", k.structure_rejections);
    read_field("lemma_rejections", k.lemma_rejections);
    read_field("curvature_evaluations", k.curvature_evaluations);
    read_field("guided_states", k.guided_states);
    read_field("guard_hits", k.guard_hits);
    std::uint64_t count = 0;
    read_field("pending", count);
    for (std::uint64_t i = 0; i < count; ++i) {
        if (!(is >> word)) fail("truncated pending list");
        cp.pending.push_back(word);
    }
    read_field("found", count);
    for (std::uint64_t i = 0; i < count; ++i) {
        if (!(is >> word)) fail("truncated found list");
        cp.found.push_back(word);
    }
    if (!(is >> word) || word != "end") fail("missing end marker");
    return cp;
}

SearchResult enumerate_flat_graphs(const SearchConstraints& c,
                                   const InterruptFn& interrupt,
                                   const Checkpoint* resume) {
    if (c.mode == SearchMode::Guided) {
        if (resume) throw std::invalid_argument("guided mode has no checkpoints");
        return guided_search(c.max_vertices);
    }
    if (c.degree_cap < 2) throw std::invalid_argument("degree cap must be at least 2");
    if (c.max_vertices < 1) throw std::invalid_argument("max vertices must be positive");
    if (c.max_vertices > 14)
        throw std::invalid_argument(
            "brute search beyond 14 vertices is refused (resource guard)");

    auto t0 = std::chrono::steady_clock::now();
    SearchCounters counters;
    std::vector<FoundGraph> found;
    std::vector<Graph> tasks;
    const int split = 7;

    if (resume) {
        if (resume->constraint_hash != constraint_hash(c))
            throw std::runtime_error("checkpoint was written for different constraints");
        counters = resume->counters;
        for (const auto& g6 : resume->pending) tasks.push_back(parse_graph6(g6));
        for (const auto& g6 : resume->found) {
            Graph g = parse_graph6(g6);
            found.push_back({canonical_form(g), g});
        }
    } else {
        BruteContext prefix{c, {}, {}};
        Graph start(1, {});
        prefix.counters.generated++;
        consider_candidate(start, c, prefix.counters, prefix.found);
        brute_expand(start, prefix, split,
                     c.max_vertices > split ? &tasks : nullptr);
        merge_counters(counters, prefix.counters);
        found.insert(found.end(), prefix.found.begin(), prefix.found.end());
    }

    // Frontier subtrees are independent; workers pull them from a shared
    // index. Results are canonically sorted afterwards, so scheduling
    // cannot influence the output.
    std::atomic<size_t> next{0};
    std::atomic<bool> stop{false};
    std::vector<char> task_done(tasks.size(), 0);
    int jobs = std::max(1, c.jobs);
    std::vector<BruteContext> locals(jobs, BruteContext{c, {}, {}});
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&](int id) {
        BruteContext& ctx = locals[id];
        while (true) {
            if (stop.load()) break;
            if (interrupt && interrupt()) {
                stop.store(true);
                break;
            }
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            try {
                brute_expand(tasks[i], ctx, -1, nullptr);
                task_done[i] = 1;
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                stop.store(true);
            }
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    for (auto& ctx : locals) {
        merge_counters(counters, ctx.counters);
        found.insert(found.end(), ctx.found.begin(), ctx.found.end());
    }

    SearchResult result;
    result.found = finalize_found(found);
    result.counters = counters;
    result.completed = true;
    for (size_t i = 0; i < tasks.size(); ++i)
        if (!task_done[i]) result.completed = false;
    if (!result.completed) {
        Checkpoint cp;
        cp.constraint_hash = constraint_hash(c);
        cp.counters = counters;
        for (size_t i = 0; i < tasks.size(); ++i)
            if (!task_done[i]) cp.pending.push_back(to_graph6(tasks[i]));
        for (const auto& f : result.found) cp.found.push_back(to_graph6(f.graph));
        result.checkpoint = std::move(cp);
        result.note = "interrupted; checkpoint holds the unexpanded frontier";
    }
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

SearchResult naive_enumerate(const SearchConstraints& c) {
    if (c.mode != SearchMode::Brute)
        throw std::invalid_argument("the naive oracle only mirrors brute mode");
    if (c.max_vertices > 11)
        throw std::invalid_argument("naive oracle refuses more than 11 vertices");
    auto t0 = std::chrono::steady_clock::now();

    SearchResult result;
    std::vector<FoundGraph> found;
    std::set<CanonicalForm> seen;
    std::vector<Graph> queue{Graph(1, {})};
    seen.insert(canonical_form(queue[0]));
    result.counters.generated++;
    consider_candidate(queue[0], c, result.counters, found);

    for (size_t head = 0; head < queue.size(); ++head) {
        Graph g = queue[head];
        if (g.vertex_count() >= c.max_vertices) continue;
        for (const auto& set : attachment_sets(g, c.degree_cap)) {
            Graph child = g.with_added_vertex(set);
            if (c.require_vertex_disjoint_4cycles &&
                !four_cycles_vertex_disjoint(child)) {
                result.counters.hereditary_rejections++;
                continue;
            }
            if (!seen.insert(canonical_form(child)).second) continue;
            result.counters.generated++;
            consider_candidate(child, c, result.counters, found);
            queue.push_back(std::move(child));
        }
    }
    result.found = finalize_found(found);
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

// ---------------------------------------------------------------------
// Guided mode: lemma-driven completion of a seeded 4-cycle.
// ---------------------------------------------------------------------

namespace {

bool pair_on_allowed(int a, int b) {  // sorted degree targets, edge on a 4-cycle
    if (a > b) std::swap(a, b);
    return (a == 2 && b == 4) || (a == 3 && b == 3) || (a == 3 && b == 4) ||
           (a == 4 && b == 4);
}

bool pair_off_allowed(int a, int b) {  // sorted degree targets, edge off all 4-cycles
    if (a > b) std::swap(a, b);
    return (a == 2 && b == 2) || (a == 2 && b == 3) || (a == 2 && b == 4) ||
           (a == 3 && b == 3);
}

struct GuidedView {
    const Graph& g;
    const std::vector<int>& target;
    std::vector<int> cycle_id;  // index of the 4-cycle containing v, or -1

    bool full(Vertex v) const { return g.degree(v) >= target[v]; }
    bool free(Vertex v) const { return !full(v); }

    bool common_neighbor(Vertex a, Vertex b) const {
        for (Vertex w : g.neighbors(a))
            if (w != b && g.adjacent(w, b)) return true;
        return false;
    }

    // Whether d(a,b) can still end at exactly 2. Optimistic (never rules
    // out something achievable), which is what a sound prune needs.
    bool can_end_2(Vertex a, Vertex b) const {
        if (a == b || g.adjacent(a, b)) return false;
        if (common_neighbor(a, b)) return true;
        if (free(a) && free(b)) return true;
        if (free(a))
            for (Vertex w : g.neighbors(b))
                if (w != a && free(w)) return true;
        if (free(b))
            for (Vertex w : g.neighbors(a))
                if (w != b && free(w)) return true;
        return false;
    }

    // Whether d(a,b) can end at exactly 3; only used for vertex pairs that
    // sit across a 4-cycle edge, where the distance never exceeds 3.
    // Distances only shrink, so "currently at most 2" is final.
    bool can_end_3(Vertex a, Vertex b) const {
        if (a == b) return false;
        return !g.distance(a, b, 2).has_value();
    }

    // Whether the currently cycle-free edge xy can still become part of a
    // 4-cycle without breaking vertex-disjointness.
    bool can_join_four_cycle(Vertex x, Vertex y) const {
        if (cycle_id[x] != -1 || cycle_id[y] != -1) return false;
        for (Vertex a : g.neighbors(x)) {
            if (a == y || cycle_id[a] != -1) continue;
            for (Vertex b : g.neighbors(y)) {
                if (b == x || b == a || cycle_id[b] != -1) continue;
                if (g.adjacent(a, b)) return true;
                if (free(a) && free(b)) return true;
            }
        }
        if (free(y))
            for (Vertex a : g.neighbors(x))
                if (a != y && cycle_id[a] == -1 && free(a)) return true;
        if (free(x))
            for (Vertex b : g.neighbors(y))
                if (b != x && cycle_id[b] == -1 && free(b)) return true;
        return free(x) && free(y);
    }
};

std::vector<Vertex> neighbors_except(const Graph& g, Vertex v, Vertex except) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v))
        if (w != except) out.push_back(w);
    return out;
}

// Distance pattern feasibility for an on-cycle edge whose endpoints are at
// full degree: some pattern in `flat` must be realizable, where entry 2
// needs can_end_2 and entry 3 needs can_end_3.
bool pattern_feasible(const GuidedView& view,
                      const std::vector<Vertex>& xs, const std::vector<Vertex>& ys,
                      const std::vector<std::vector<std::vector<int>>>& flat) {
    for (const auto& pat : flat) {
        bool ok = true;
        for (size_t i = 0; i < xs.size() && ok; ++i)
            for (size_t j = 0; j < ys.size() && ok; ++j) {
                if (pat[i][j] == 2)
                    ok = view.can_end_2(xs[i], ys[j]);
                else
                    ok = view.can_end_3(xs[i], ys[j]);
            }
        if (ok) return true;
    }
    return false;
}

// Every constraint checked here is monotone: once it fails, no sequence of
// further additions can repair it, so the branch is dead.
bool guided_state_ok(const Graph& g, const std::vector<int>& target) {
    auto cat = girth_and_cycles(g);
    if (cat.girth && *cat.girth < 4) return false;
    if (!four_cycles_vertex_disjoint(g)) return false;

    GuidedView view{g, target, std::vector<int>(g.vertex_count(), -1)};
    for (size_t i = 0; i < cat.four_cycles.size(); ++i)
        for (Vertex v : cat.four_cycles[i]) view.cycle_id[v] = static_cast<int>(i);

    for (const Edge& e : g.edges()) {
        Vertex x = e.first, y = e.second;
        if (target[x] > target[y]) std::swap(x, y);
        int tx = target[x], ty = target[y];
        auto prof = edge_cycle_profile(g, e);
        bool on = prof.four_cycles == 1;

        if (on) {
            if (!pair_on_allowed(tx, ty)) return false;
            auto cycle = four_cycles_through_edge(g, e.first, e.second).at(0);
            auto in_cycle = [&](Vertex w) {
                return std::find(cycle.begin(), cycle.end(), w) != cycle.end();
            };
            if (tx == 2 && ty == 4 && prof.five_cycles > 0) return false;
            if (tx == 3 && ty == 3 && view.full(x) && view.full(y)) {
                Vertex x2 = -1, y2 = -1;
                for (Vertex w : neighbors_except(g, x, y))
                    if (!in_cycle(w)) x2 = w;
                for (Vertex w : neighbors_except(g, y, x))
                    if (!in_cycle(w)) y2 = w;
                if (g.distance(x2, y2, 2).has_value()) return false;
            }
            if (tx == 3 && ty == 4 && view.full(x) && view.full(y)) {
                Vertex x1 = -1, x2 = -1;
                for (Vertex w : neighbors_except(g, x, y)) (in_cycle(w) ? x1 : x2) = w;
                std::vector<Vertex> ys;
                for (Vertex w : neighbors_except(g, y, x))
                    if (!in_cycle(w)) ys.push_back(w);
                static const std::vector<std::vector<std::vector<int>>> flat34 = {
                    {{3, 3}, {2, 2}},  // type B
                    {{2, 2}, {2, 3}}, {{2, 2}, {3, 2}},
                    {{2, 3}, {3, 2}}, {{3, 2}, {2, 3}},  // type A
                };
                if (!pattern_feasible(view, {x1, x2}, ys, flat34)) return false;
            }
            if (tx == 4 && ty == 4 && view.full(x) && view.full(y)) {
                std::vector<Vertex> xs, ys;
                for (Vertex w : neighbors_except(g, x, y))
                    if (!in_cycle(w)) xs.push_back(w);
                for (Vertex w : neighbors_except(g, y, x))
                    if (!in_cycle(w)) ys.push_back(w);
                bool feasible = (view.can_end_2(xs[0], ys[0]) && view.can_end_2(xs[1], ys[1])) ||
                                (view.can_end_2(xs[0], ys[1]) && view.can_end_2(xs[1], ys[0]));
                if (!feasible) return false;
            }
            continue;
        }

        bool can_on = view.can_join_four_cycle(e.first, e.second);
        bool must_off = !pair_on_allowed(tx, ty) || !can_on;
        if (must_off && !pair_off_allowed(tx, ty)) return false;
        if (!must_off) continue;

        if (tx == 2 && ty == 2 && prof.five_cycles > 0) return false;
        if (tx == 3 && ty == 3) {
            if (view.full(x) && view.full(y)) {
                // The edge must end in at least two 5-cycles; bound what
                // can still appear.
                int possible = prof.five_cycles;
                for (Vertex a : neighbors_except(g, x, y))
                    for (Vertex b : neighbors_except(g, y, x)) {
                        if (a == b || view.common_neighbor(a, b)) continue;
                        if (view.can_end_2(a, b)) possible++;
                    }
                if (possible < 2) return false;
            }
        }
        if (tx == 2 && ty == 3 && view.full(x) && view.full(y)) {
            Vertex x1 = neighbors_except(g, x, y).at(0);
            auto ys = neighbors_except(g, y, x);
            if (g.adjacent(x1, ys[0]) || g.adjacent(x1, ys[1])) return false;
            bool two = view.can_end_2(x1, ys[0]) || view.can_end_2(x1, ys[1]);
            bool three = view.can_end_3(x1, ys[0]) || view.can_end_3(x1, ys[1]);
            if (!two || !three) return false;
        }
        if (tx == 2 && ty == 4 && view.full(x) && view.full(y)) {
            Vertex x1 = neighbors_except(g, x, y).at(0);
            int close = 0;
            for (Vertex yi : neighbors_except(g, y, x))
                if (view.can_end_2(x1, yi)) close++;
            if (close < 2) return false;
        }
    }

    // A vertex lies on at most one 4-cycle, so at most two of its edges can
    // ever be cycle edges; (3,4)- and (4,4)-target edges must be.
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (view.cycle_id[v] != -1) continue;  // handled by can_join checks
        int mandatory = 0;
        for (Vertex u : g.neighbors(v))
            if (pair_on_allowed(target[v], target[u]) &&
                !pair_off_allowed(target[v], target[u]))
                mandatory++;
        if (mandatory > 2) return false;
    }
    return true;
}

struct GuidedState {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<int> target;
    // Ordering memory for the vertex currently being completed; kills
    // permutation duplicates of the same completion.
    int active = -1;
    int last_existing = -1;
    int min_fresh_target = 2;
    bool fresh_started = false;
};

struct GuidedContext {
    int guard = 16;
    SearchCounters counters;
    std::vector<FoundGraph> found;
};

void guided_freeze(const Graph& g, GuidedContext& ctx) {
    ctx.counters.candidates++;
    for (const Edge& e : g.edges()) {
        auto prof = edge_cycle_profile(g, e);
        if (prof.four_cycles == 1) {
            if (classify_four_cycle_edge(g, e).kind == FourCycleKind::NotFlatCompatible) {
                ctx.counters.lemma_rejections++;
                return;
            }
        } else {
            if (check_lemma2(g, e).kind == NoFourCycleKind::Violation) {
                ctx.counters.lemma_rejections++;
                return;
            }
        }
    }
    ctx.counters.curvature_evaluations++;
    if (is_ricci_flat(g, 1).is_ricci_flat) ctx.found.push_back({canonical_form(g), g});
}

void guided_dfs(const GuidedState& s, GuidedContext& ctx) {
    ctx.counters.guided_states++;
    Graph g(s.n, s.edges);
    Vertex v = -1;
    for (Vertex i = 0; i < s.n; ++i)
        if (g.degree(i) < s.target[i]) {
            v = i;
            break;
        }
    if (v == -1) {
        guided_freeze(g, ctx);
        return;
    }

    GuidedState base = s;
    if (v != base.active) {
        base.active = v;
        base.last_existing = -1;
        base.min_fresh_target = 2;
        base.fresh_started = false;
    }

    // Connect to an existing deficient vertex (ascending, before any fresh
    // vertex: every completion has exactly one representative ordering).
    if (!base.fresh_started) {
        for (Vertex u = base.last_existing + 1; u < s.n; ++u) {
            if (u == v || g.adjacent(u, v) || g.degree(u) >= s.target[u]) continue;
            GuidedState t = base;
            t.edges.push_back(make_edge(v, u));
            t.last_existing = u;
            if (guided_state_ok(Graph(t.n, t.edges), t.target)) guided_dfs(t, ctx);
        }
    }

    // Attach a fresh vertex (non-decreasing degree targets).
    if (s.n >= ctx.guard) {
        ctx.counters.guard_hits++;
        return;
    }
    for (int tt = base.min_fresh_target; tt <= 4; ++tt) {
        GuidedState t = base;
        t.target.push_back(tt);
        t.edges.push_back(make_edge(v, t.n));
        t.n++;
        t.fresh_started = true;
        t.min_fresh_target = tt;
        if (guided_state_ok(Graph(t.n, t.edges), t.target)) guided_dfs(t, ctx);
    }
}

}  // namespace

SearchResult guided_search(int max_vertices) {
    if (max_vertices < 4)
        throw std::invalid_argument("guided search needs at least 4 vertices");
    auto t0 = std::chrono::steady_clock::now();

    static const std::vector<std::array<int, 4>> sequences = {
        {2, 4, 2, 4}, {2, 4, 4, 4}, {3, 3, 3, 3}, {3, 3, 3, 4},
        {3, 3, 4, 4}, {3, 4, 4, 4}, {3, 4, 3, 4}, {4, 4, 4, 4},
    };

    SearchResult result;
    std::vector<FoundGraph> all_found;
    for (const auto& seq : sequences) {
        GuidedContext ctx;
        ctx.guard = max_vertices;
        GuidedState seed;
        seed.n = 4;
        seed.edges = {make_edge(0, 1), make_edge(1, 2), make_edge(2, 3), make_edge(0, 3)};
        seed.target = {seq[0], seq[1], seq[2], seq[3]};
        if (guided_state_ok(Graph(seed.n, seed.edges), seed.target)) guided_dfs(seed, ctx);

        GuidedCaseResult cr;
        cr.label = "(" + std::to_string(seq[0]) + "," + std::to_string(seq[1]) + "," +
                   std::to_string(seq[2]) + "," + std::to_string(seq[3]) + ")";
        cr.found = finalize_found(ctx.found);
        cr.states = ctx.counters.guided_states;
        cr.guard_hits = ctx.counters.guard_hits;
        all_found.insert(all_found.end(), cr.found.begin(), cr.found.end());
        merge_counters(result.counters, ctx.counters);
        result.cases.push_back(std::move(cr));
    }

    result.found = finalize_found(all_found);
    if (result.counters.guard_hits > 0)
        result.note = "some branches hit the " + std::to_string(max_vertices) +
                      "-vertex guard; completions beyond it were not explored";
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace ricci

