#include "ricci/transport.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace ricci {

MassVector::MassVector(std::vector<std::pair<Vertex, Rational>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].second < 0)
            throw std::invalid_argument("negative mass at vertex " +
                                        std::to_string(entries[i].first));
        if (i > 0 && entries[i].first == entries[i - 1].first)
            throw std::invalid_argument("duplicate support vertex " +
                                        std::to_string(entries[i].first));
        if (entries[i].second > 0) entries_.push_back(entries[i]);
    }
}

Rational MassVector::mass(Vertex v) const {
    for (const auto& [u, m] : entries_)
        if (u == v) return m;
    return Rational(0);
}

Rational MassVector::total() const {
    Rational t(0);
    for (const auto& [u, m] : entries_) t += m;
    return t;
}

std::vector<Vertex> MassVector::support() const {
    std::vector<Vertex> s;
    s.reserve(entries_.size());
    for (const auto& [u, m] : entries_) s.push_back(u);
    return s;
}

namespace {

// Minimal successive-shortest-path min-cost flow with exact big-integer
// capacities and small integer costs. Sizes here are tiny (supports are
// at most max degree + 1), so Bellman-Ford per augmentation is fine and
// keeps parent selection deterministic.
struct FlowNetwork {
    struct Arc {
        int to;
        Integer cap;
        long cost;
        int rev;  // index of reverse arc in arcs[to]
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNetwork(int nodes) : arcs(nodes) {}

    void add_arc(int from, int to, Integer cap, long cost) {
        arcs[from].push_back({to, std::move(cap), cost, static_cast<int>(arcs[to].size())});
        arcs[to].push_back({from, 0, -cost, static_cast<int>(arcs[from].size() - 1)});
    }

    // Sends `need` units from s to t at minimum cost; returns false if
    // the required amount cannot be routed.
    bool send(int s, int t, const Integer& need) {
        Integer remaining = need;
        int n = static_cast<int>(arcs.size());
        while (remaining > 0) {
            const long kInf = std::numeric_limits<long>::max() / 4;
            std::vector<long> dist(n, kInf);
            std::vector<int> par_node(n, -1), par_arc(n, -1);
            dist[s] = 0;
            for (int round = 0; round < n; ++round) {
                bool changed = false;
                for (int u = 0; u < n; ++u) {
                    if (dist[u] >= kInf) continue;
                    for (int k = 0; k < static_cast<int>(arcs[u].size()); ++k) {
                        const Arc& a = arcs[u][k];
                        if (a.cap > 0 && dist[u] + a.cost < dist[a.to]) {
                            dist[a.to] = dist[u] + a.cost;
                            par_node[a.to] = u;
                            par_arc[a.to] = k;
                            changed = true;
                        }
                    }
                }
                if (!changed) break;
            }
            if (dist[t] >= kInf) return false;
            Integer push = remaining;
            for (int v = t; v != s; v = par_node[v]) {
                const Arc& a = arcs[par_node[v]][par_arc[v]];
                if (a.cap < push) push = a.cap;
            }
            for (int v = t; v != s; v = par_node[v]) {
                Arc& a = arcs[par_node[v]][par_arc[v]];
                a.cap -= push;
                arcs[v][a.rev].cap += push;
            }
            remaining -= push;
        }
        return true;
    }
};

Integer lcm_of_denominators(const MassVector& a, const MassVector& b) {
    Integer l = 1;
    for (const auto& [v, m] : a.entries()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.get_den().get_mpz_t());
    for (const auto& [v, m] : b.entries()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.get_den().get_mpz_t());
    return l;
}

std::vector<Vertex> support_union(const MassVector& a, const MassVector& b) {
    std::set<Vertex> u;
    for (const auto& [v, m] : a.entries()) u.insert(v);
    for (const auto& [v, m] : b.entries()) u.insert(v);
    return {u.begin(), u.end()};
}

// Potential via difference constraints: 1-Lipschitz feasibility on every
// ordered pair of the union, tightness on flow-carrying pairs. Solved by
// Bellman-Ford from a virtual source; infeasibility would contradict
// optimality of the plan.
std::map<Vertex, Rational> recover_potential(const std::vector<Vertex>& uni,
                                             const std::vector<TransportMove>& moves,
                                             const CostFn& cost) {
    int n = static_cast<int>(uni.size());
    std::map<Vertex, int> index;
    for (int i = 0; i < n; ++i) index[uni[i]] = i;

    struct Constraint {
        int from, to;
        long weight;
    };  // f(to) <= f(from) + weight
    std::vector<Constraint> cons;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (p != q) cons.push_back({q, p, cost(uni[p], uni[q])});
    for (const auto& mv : moves) {
        if (mv.from == mv.to) continue;
        cons.push_back({index.at(mv.from), index.at(mv.to), -cost(mv.from, mv.to)});
    }

    const long kInf = std::numeric_limits<long>::max() / 4;
    std::vector<long> f(n, 0);  // virtual source at 0 to every node
    for (int round = 0; round <= n; ++round) {
        bool changed = false;
        for (const auto& c : cons) {
            if (f[c.from] < kInf && f[c.from] + c.weight < f[c.to]) {
                f[c.to] = f[c.from] + c.weight;
                changed = true;
            }
        }
        if (!changed) break;
        if (round == n)
            throw std::logic_error("dual recovery found a negative cycle; plan not optimal");
    }
    long base = f.empty() ? 0 : f[0];
    std::map<Vertex, Rational> pot;
    for (int i = 0; i < n; ++i) pot[uni[i]] = Rational(f[i] - base);
    return pot;
}

}  // namespace

TransportSolution solve_transport(const MassVector& supply, const MassVector& demand,
                                  const CostFn& cost) {
    if (!supply.is_probability()) throw std::invalid_argument("supply does not sum to 1");
    if (!demand.is_probability()) throw std::invalid_argument("demand does not sum to 1");
    const auto& sup = supply.entries();
    const auto& dem = demand.entries();
    for (const auto& [u, mu] : sup)
        for (const auto& [v, mv] : dem)
            if (cost(u, v) < 0) throw std::invalid_argument("negative cost");

    Integer scale = lcm_of_denominators(supply, demand);
    int ns = static_cast<int>(sup.size());
    int nt = static_cast<int>(dem.size());
    int source = ns + nt, sink = ns + nt + 1;
    FlowNetwork net(ns + nt + 2);
    for (int i = 0; i < ns; ++i) {
        Integer s = sup[i].second.get_num() * (scale / sup[i].second.get_den());
        net.add_arc(source, i, s, 0);
    }
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nt; ++j)
            net.add_arc(i, ns + j, scale, cost(sup[i].first, dem[j].first));
    for (int j = 0; j < nt; ++j) {
        Integer d = dem[j].second.get_num() * (scale / dem[j].second.get_den());
        net.add_arc(ns + j, sink, d, 0);
    }
    if (!net.send(source, sink, scale))
        throw std::logic_error("transportation problem infeasible");

    TransportSolution sol;
    sol.plan.cost = 0;
    for (int j = 0; j < nt; ++j) {
        for (const auto& a : net.arcs[ns + j]) {
            // Reverse arcs of i -> j hold the shipped amount.
            if (a.to < ns && a.cap > 0) {
                Rational amt(a.cap, scale);
                amt.canonicalize();
                int c = cost(sup[a.to].first, dem[j].first);
                sol.plan.moves.push_back({sup[a.to].first, dem[j].first, amt});
                sol.plan.cost += amt * c;
            }
        }
    }
    std::sort(sol.plan.moves.begin(), sol.plan.moves.end(), [](const auto& a, const auto& b) {
        return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    });

    auto uni = support_union(supply, demand);
    sol.certificate.potential = recover_potential(uni, sol.plan.moves, cost);
    sol.certificate.objective = 0;
    for (Vertex v : uni)
        sol.certificate.objective +=
            sol.certificate.potential.at(v) * (supply.mass(v) - demand.mass(v));
    return sol;
}

bool verify_plan(const TransportPlan& plan, const MassVector& supply,
                 const MassVector& demand, const CostFn& cost, std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    std::map<Vertex, Rational> row, col;
    Rational total(0);
    for (const auto& mv : plan.moves) {
        if (mv.amount < 0) return fail("negative amount");
        row[mv.from] += mv.amount;
        col[mv.to] += mv.amount;
        total += mv.amount * cost(mv.from, mv.to);
    }
    for (const auto& [v, m] : supply.entries())
        if (row[v] != m) return fail("row sum mismatch at vertex " + std::to_string(v));
    for (const auto& [v, m] : row)
        if (supply.mass(v) != m) return fail("move from non-support vertex " + std::to_string(v));
    for (const auto& [v, m] : demand.entries())
        if (col[v] != m) return fail("column sum mismatch at vertex " + std::to_string(v));
    for (const auto& [v, m] : col)
        if (demand.mass(v) != m) return fail("move to non-support vertex " + std::to_string(v));
    if (total != plan.cost) return fail("stated cost differs from recomputed cost");
    return true;
}

bool verify_certificate(const DualCertificate& cert, const MassVector& supply,
                        const MassVector& demand, const CostFn& distance,
                        std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    for (Vertex v : support_union(supply, demand))
        if (!cert.potential.count(v))
            return fail("potential missing at vertex " + std::to_string(v));
    for (const auto& [u, fu] : cert.potential) {
        for (const auto& [v, fv] : cert.potential) {
            if (u >= v) continue;
            Rational diff = fu - fv;
            if (diff < 0) diff = -diff;
            if (diff > distance(u, v))
                return fail("Lipschitz violation on pair " + std::to_string(u) + "," +
                            std::to_string(v));
        }
    }
    Rational obj(0);
    for (const auto& [v, fv] : cert.potential) obj += fv * (supply.mass(v) - demand.mass(v));
    if (obj != cert.objective) return fail("stated objective differs from recomputed value");
    return true;
}

}  // namespace ricci
